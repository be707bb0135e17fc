"""Command line front end: ``homlie [--json] COMMAND ...``.

Exit codes: 0 when the computation succeeds and every claim checked holds;
1 for a mathematical failure (violated axiom, failed precondition, inexact
sequence), always with a witness; 2 for usage and parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from . import actions as act_mod
from .algebra import (
    HomLieAlgebra,
    Violation,
    center,
    commutator,
    derived,
    format_vector,
    full_space,
    hom_lie_violations,
    perfectness_flags,
)
from .central import five_term_sequence, uce_alpha, uce_alpha_properties, uce_alpha_vs_tensor, uce_via_tensor
from .cyclic import (
    alpha_identity_witness,
    assoc_violations,
    cyclic_exact_sequence,
    cyclic_presentation,
    lie_of_assoc,
    milnor_hc1,
)
from .errors import (
    AxiomViolation,
    DimensionMismatch,
    HomLieError,
    IncompatibleActions,
    InternalInconsistency,
    ParseError,
    PreconditionViolated,
    ShapeError,
    UnsupportedField,
)
from .fields import Field, Mod, QuadNumber, field_spec
from .hla import HlaDocument, load_hla
from .homology import (
    chain_complex,
    h0_closed_form,
    h1_trivial_closed_form,
    h2_alpha,
    homology_dim,
    trivial_module,
)
from .instances import derivation_sequence_of_semidirect, module_from_ideal, require_ideal, right_exactness_from_ideals
from .linalg import Subspace
from .tensor import psi_maps, swap_map, tensor_product, tensor_square_sequence

VERIFIERS = ("prop2_9", "prop2_10", "thm1_13", "thm2_14", "thm4_8")


class UsageError(Exception):
    """Bad command line input (exit code 2)."""


@dataclass
class Report:
    command: str
    inputs: dict
    field: Field | None = None
    results: dict = dc_field(default_factory=dict)
    witnesses: list = dc_field(default_factory=list)
    failed: bool = False

    def add(self, name, value):
        self.results[name] = value

    def witness(self, w):
        self.witnesses.append(w)
        self.failed = True

    def as_json(self) -> dict:
        F = self.field
        return {
            "command": self.command,
            "inputs": self.inputs,
            "results": {k: _plain(F, v) for k, v in self.results.items()},
            "witnesses": [_plain(F, w) for w in self.witnesses],
        }

    def as_text(self) -> str:
        data = self.as_json()
        lines = [f"command: {self.command}"]
        for k, v in self.inputs.items():
            if v is not None and v is not False:
                lines.append(f"input {k}: {_text(v)}")
        for k, v in data["results"].items():
            lines.append(f"{k}: {_text(v)}")
        for w in data["witnesses"]:
            lines.append(f"witness: {_text(w)}")
        lines.append("status: " + ("FAILED" if self.failed else "ok"))
        return "\n".join(lines)


def _is_scalar(x) -> bool:
    return isinstance(x, (Fraction, QuadNumber, Mod))


def _plain(F, v):
    """JSON-ready copy with every field element written in file syntax."""
    if isinstance(v, bool) or v is None or isinstance(v, (int, str)):
        return v
    if _is_scalar(v):
        return F.format(v) if F is not None else str(v)
    if isinstance(v, dict):
        return {str(k): _plain(F, x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_plain(F, x) for x in v]
    return str(v)


def _text(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, list):
        return "[" + ", ".join(_text(x) for x in v) + "]"
    if isinstance(v, dict):
        return "{" + ", ".join(f"{k}: {_text(x)}" for k, x in v.items()) + "}"
    return str(v)


# ---------------------------------------------------------------------------
# witnesses in basis notation


def _idx(*ks) -> str:
    return ",".join(str(k + 1) for k in ks)


_LIE_TEMPLATES = {
    "skew-symmetry": lambda i, j: f"[e{i},e{i}]" if i == j else f"[e{i},e{j}] + [e{j},e{i}]",
    "hom-jacobi": lambda i, j, k: f"[α(e{i}),[e{j},e{k}]] + [α(e{j}),[e{k},e{i}]] + [α(e{k}),[e{i},e{j}]]",
    "multiplicativity": lambda i, j: f"α([e{i},e{j}]) - [α(e{i}),α(e{j})]",
}
_ASSOC_TEMPLATES = {
    "hom-associativity": lambda i, j, k: f"α(e{i})(e{j}e{k}) - (e{i}e{j})α(e{k})",
    "multiplicativity": lambda i, j: f"α(e{i}e{j}) - α(e{i})α(e{j})",
}
_ACTION_TEMPLATES = {
    "action-a": lambda i, j, k: f"^{{[x{i},x{j}]}}α(m{k}) - ^{{α(x{i})}}(^{{x{j}}}m{k}) + ^{{α(x{j})}}(^{{x{i}}}m{k})",
    "action-b": lambda i, k, l: f"^{{α(x{i})}}[m{k},m{l}] - [^{{x{i}}}m{k},α(m{l})] - [α(m{k}),^{{x{i}}}m{l}]",
    "action-c": lambda i, k: f"α(^{{x{i}}}m{k}) - ^{{α(x{i})}}α(m{k})",
}


_INDEX_NAMES = {"action-b": "ikl", "action-c": "ik"}


def violation_witness(F: Field, v: Violation, templates: dict) -> dict:
    one = [i + 1 for i in v.indices]
    names = _INDEX_NAMES.get(v.axiom, "ijkl")[: len(one)]
    symbol = "m" if v.axiom.startswith("action") else "e"
    return {
        "axiom": v.axiom,
        "at": f"({','.join(names)})=({_idx(*v.indices)})",
        "expression": templates[v.axiom](*one),
        "value": format_vector(F, v.residual, symbol),
        "residual": list(v.residual),
    }


def _vec_witness(F, label, v, symbol="e"):
    return {"relation": label, "value": format_vector(F, v, symbol), "residual": list(v)}


def render_precondition(F: Field, exc: PreconditionViolated):
    """Turn the witness attached to a failed precondition into plain data."""
    w = exc.witness
    out = {"reason": str(exc)}
    if isinstance(w, list) and w and isinstance(w[0], Violation):
        out["violations"] = [violation_witness(F, x, {**_LIE_TEMPLATES, **_ASSOC_TEMPLATES, **_ACTION_TEMPLATES}) for x in w]
    elif isinstance(w, dict):
        out["detail"] = {k: _detail(F, k, x) for k, x in w.items()}
    elif w is not None:
        out["detail"] = _detail(F, "", w)
    return out


_INDEX_KEYS = {"i", "j", "k", "l"}


def _detail(F, key, x):
    """Vectors become basis expressions; entries under index keys become 1-based."""
    if isinstance(x, tuple) and x and all(_is_scalar(c) for c in x):
        return format_vector(F, x)
    if key in _INDEX_KEYS and isinstance(x, int) and not isinstance(x, bool):
        return x + 1
    if isinstance(x, (tuple, list)):
        return [_detail(F, "", y) for y in x]
    return x


# ---------------------------------------------------------------------------
# input helpers


def _load(path: str) -> HlaDocument:
    try:
        return load_hla(path)
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror or e}") from None
    except ParseError as e:
        raise UsageError(f"{path}: {e}") from None


def _load_lie(path: str) -> HomLieAlgebra:
    doc = _load(path)
    if doc.kind != "lie":
        raise UsageError(f"{path} describes {doc.kind!r}, a Hom-Lie algebra file is needed")
    return doc.to_lie()


def _valid_lie(path: str, rep: Report) -> HomLieAlgebra | None:
    L = _load_lie(path)
    rep.field = L.field
    bad = hom_lie_violations(L)
    if bad:
        for v in bad:
            rep.witness(violation_witness(L.field, v, _LIE_TEMPLATES))
        return None
    return L


def parse_span(F: Field, text: str, n: int) -> Subspace:
    """``all``, ``0``, or vectors separated by ``;`` given as ``eK`` or ``n`` scalars."""
    t = text.strip()
    if t == "all":
        return Subspace.full(F, n)
    if t in ("0", "none", ""):
        return Subspace.zero(F, n)
    vecs = []
    for part in t.split(";"):
        part = part.strip()
        if part.startswith("e") and part[1:].isdigit():
            k = int(part[1:])
            if not 1 <= k <= n:
                raise UsageError(f"basis vector {part} out of range 1..{n}")
            vecs.append(tuple(F.one if i == k - 1 else F.zero for i in range(n)))
            continue
        toks = part.replace(",", " ").split()
        if len(toks) != n:
            raise UsageError(f"vector {part!r} needs {n} scalars")
        try:
            vecs.append(tuple(F.parse(x) for x in toks))
        except (ParseError, ValueError, ZeroDivisionError):
            raise UsageError(f"bad scalar in {part!r}") from None
    return Subspace.span(F, n, vecs)


def _span_basis(F, S: Subspace) -> list:
    return [format_vector(F, b) for b in S.basis]


# ---------------------------------------------------------------------------
# commands


def cmd_validate(args, rep: Report):
    doc = _load(args.file)
    F = doc.field
    rep.field = F
    rep.add("kind", doc.kind)
    rep.add("field", field_spec(F))
    if doc.kind == "lie":
        L = doc.to_lie()
        rep.add("dim", L.dim)
        bad = hom_lie_violations(L)
        templates = _LIE_TEMPLATES
    elif doc.kind == "assoc":
        A = _assoc(doc)
        rep.add("dim", A.dim)
        bad = assoc_violations(A)
        templates = _ASSOC_TEMPLATES
    else:
        if not (args.actor and args.actee):
            raise UsageError("validating an action needs --actor and --actee algebra files")
        act = doc.to_action(_load_lie(args.actor), _load_lie(args.actee))
        rep.add("dims", list(doc.dims))
        bad = act_mod.action_violations(act)
        templates = _ACTION_TEMPLATES
    rep.add("valid", not bad)
    rep.add("violations", len(bad))
    for v in bad:
        rep.witness(violation_witness(F, v, templates))


def _assoc(doc: HlaDocument):
    try:
        return doc.to_assoc()
    except UnsupportedField as e:
        raise UsageError(str(e)) from None


def cmd_invariants(args, rep: Report):
    L = _valid_lie(args.file, rep)
    if L is None:
        return
    pf = perfectness_flags(L)
    Z = center(L)
    rep.add("dim", L.dim)
    rep.add("center_dim", Z.dim)
    rep.add("center", _span_basis(L.field, Z))
    rep.add("derived_dim", pf.derived.dim)
    rep.add("derived", _span_basis(L.field, pf.derived))
    rep.add("alpha_image_dim", pf.alpha_image.dim)
    rep.add("alpha_derived_dim", pf.alpha_derived.dim)
    rep.add("alpha_derived", _span_basis(L.field, pf.alpha_derived))
    rep.add("perfect", pf.perfect)
    rep.add("alpha_perfect", pf.alpha_perfect)
    rep.add("alpha_surjective", pf.alpha_surjective)


def cmd_homology(args, rep: Report):
    L = _valid_lie(args.file, rep)
    if L is None:
        return
    if args.max_n < 0:
        raise UsageError("--max-n must be non-negative")
    if args.coeffs == "trivial":
        module = trivial_module(L)
    else:
        module = act_mod.HomAction.adjoint(L)
    cc = chain_complex(L, module, args.max_n + 1)
    rep.add("coefficients", args.coeffs)
    rep.add("chain_dims", [cc.dim(n) for n in range(args.max_n + 2)])
    rep.add("d_squared_zero", True)
    dims = [homology_dim(cc, n) for n in range(args.max_n + 1)]
    for n, d in enumerate(dims):
        rep.add(f"H{n}", d)
    h0 = h0_closed_form(module)
    rep.add("H0_closed_form", h0)
    if h0 != dims[0]:
        rep.witness({"relation": "dim H0 = dim M/^L M", "complex": dims[0], "closed_form": h0})
    if args.max_n >= 1 and module.is_trivial():
        h1 = h1_trivial_closed_form(L, module)
        rep.add("H1_closed_form", h1)
        if h1 != dims[1]:
            rep.witness({"relation": "dim H1 = dim (M (x) L)/(alpha_M(M) (x) [L,L])", "complex": dims[1], "closed_form": h1})
    if args.max_n >= 2 and args.coeffs == "trivial" and perfectness_flags(L).perfect:
        h2 = h2_alpha(L)
        rep.add("H2_via_tensor", h2.tensor_dim)
        if not h2.agree:
            rep.witness({"relation": "dim H2 = dim Ker(L*L -> L)", "complex": h2.complex_dim, "tensor": h2.tensor_dim})


def cmd_tensor(args, rep: Report):
    M = _valid_lie(args.m, rep)
    N = _valid_lie(args.n, rep)
    if M is None or N is None:
        return
    if M.field != N.field:
        raise UsageError("the two algebras live over different fields")
    if args.adjoint:
        if M != N:
            raise UsageError("--adjoint needs the same algebra on both sides")
        amn = anm = act_mod.HomAction.adjoint(M)
    elif args.trivial:
        amn, anm = act_mod.HomAction.trivial(M, N), act_mod.HomAction.trivial(N, M)
    else:
        if not (args.act_mn and args.act_nm):
            raise UsageError("give --act-mn and --act-nm, or --adjoint, or --trivial")
        amn = _action(args.act_mn, M, N)
        anm = _action(args.act_nm, N, M)
    for name, a in (("act-mn", amn), ("act-nm", anm)):
        bad = act_mod.action_violations(a)
        for v in bad:
            w = violation_witness(M.field, v, _ACTION_TEMPLATES)
            w["action"] = name
            rep.witness(w)
    if rep.failed:
        return
    try:
        T = tensor_product(M, N, amn, anm)
    except IncompatibleActions as e:
        ident, (m, n, p), r = e.witness
        rep.witness({"relation": ident, "at": f"(m,n,primed)=({_idx(m, n, p)})", "value": format_vector(M.field, r), "residual": list(r)})
        return
    rep.add("ambient_dim", T.ambient)
    rep.add("relations_dim", T.D.dim)
    rep.add("dim", T.dim)
    for k, v in T.certificates.items():
        rep.add(f"certificate_{k}", v)
    pr = psi_maps(T)
    rep.add("psi_M_kernel_dim", pr.kernel_M.dim)
    rep.add("psi_N_kernel_dim", pr.kernel_N.dim)
    rep.add("psi_M_image_dim", pr.image_M.dim)
    rep.add("psi_N_image_dim", pr.image_N.dim)
    rep.add("psi_properties", pr.ok)
    T2 = tensor_product(N, M, anm, amn)
    sw = swap_map(T, T2)
    rep.add("swap_isomorphism", sw.isomorphism)
    rep.add("swap_involutive", sw.involutive)
    rep.add("abelian", T.algebra.is_abelian())
    if amn.is_trivial() and anm.is_trivial() and perfectness_flags(M).alpha_surjective and perfectness_flags(N).alpha_surjective:
        pred = (M.dim - derived(M).dim) * (N.dim - derived(N).dim)
        rep.add("abelianization_product_dim", pred)
        if pred != T.dim:
            rep.witness({"relation": "dim M*N = dim M^ab * dim N^ab", "tensor": T.dim, "product": pred})
    if not (pr.ok and sw.isomorphism and sw.involutive):
        rep.witness({"relation": "tensor product structure maps", "psi": pr.ok, "swap": sw.isomorphism})


def _action(path, actor, actee):
    doc = _load(path)
    if doc.kind != "action":
        raise UsageError(f"{path} is not an action file")
    try:
        return doc.to_action(actor, actee)
    except DimensionMismatch as e:
        raise UsageError(f"{path}: {e}") from None


def cmd_uce(args, rep: Report):
    L = _valid_lie(args.file, rep)
    if L is None:
        return
    F = L.field
    try:
        if args.alpha:
            U = uce_alpha(L)
            props = uce_alpha_properties(U)
            cmp_ = uce_alpha_vs_tensor(L)
            rep.add("construction", "exterior")
            rep.add("dim", U.dim)
            rep.add("ambient_dim", len(U.pairs))
            rep.add("relations_dim", U.I.dim)
            for k, v in props.items():
                rep.add(k, v)
            rep.add("alpha_image_tensor_dim", cmp_["tensor_dim"])
            rep.add("tensor_isomorphism", cmp_["isomorphism"])
            ok = props["u_surjective"] and props["alpha_central"] and props["cover_alpha_perfect"] and cmp_["isomorphism"]
        else:
            U = uce_via_tensor(L)
            rep.add("construction", "tensor")
            rep.add("dim", U.algebra.dim)
            rep.add("kernel_dim", U.kernel.dim)
            for k, v in U.checks.items():
                rep.add(k, v)
            ok = U.ok
    except PreconditionViolated as e:
        rep.witness(render_precondition(F, e))
        return
    if not ok:
        rep.witness({"relation": "universal central extension properties", "results": dict(rep.results)})


def cmd_cyclic(args, rep: Report):
    doc = _load(args.file)
    if doc.kind != "assoc":
        raise UsageError(f"{args.file} describes {doc.kind!r}, a Hom-associative file is needed")
    A = _assoc(doc)
    F = A.field
    rep.field = F
    bad = assoc_violations(A)
    rep.add("dim", A.dim)
    rep.add("hom_associative", not any(v.axiom == "hom-associativity" for v in bad))
    rep.add("multiplicative", not any(v.axiom == "multiplicativity" for v in bad))
    for v in bad:
        rep.witness(violation_witness(F, v, _ASSOC_TEMPLATES))
    w = alpha_identity_witness(A)
    rep.add("alpha_identity", w is None)
    if w is not None:
        i, j, r = w
        rep.add("alpha_identity_counterexample", {"at": f"(i,j)=({_idx(i, j)})", "expression": f"[e{i + 1},e{j + 1}] - [α(e{i + 1}),e{j + 1}]", "value": format_vector(F, r)})
    if any(v.axiom == "hom-associativity" for v in bad):
        return
    cp = cyclic_presentation(A)
    rep.add("commutative", cp.commutators.dim == 0)
    rep.add("tensor_square_mod_J_dim", cp.quotient.dim)
    rep.add("commutators_dim", cp.commutators.dim)
    rep.add("HC1_dim", cp.hc1_dim)
    rep.add("HC1_Milnor_dim", milnor_hc1(A).dim)
    LA = lie_of_assoc(A)
    AC = commutator(LA, full_space(LA), Subspace.span(F, A.dim, cp.commutators.basis))
    rep.add("commutators_mod_double_commutators_dim", cp.commutators.dim - AC.dim)


def _run_report(report, rep: Report):
    for k, v in report.checks.items():
        rep.add(k, v)
    for k, v in report.dims.items():
        rep.add(f"dim {k}", v)
    failing = [k for k, v in report.checks.items() if not v]
    if failing:
        rep.witness({"failing_checks": failing, "dims": dict(report.dims)})


def cmd_verify(args, rep: Report):
    which = args.which
    if which == "thm4_8":
        doc = _load(args.file)
        if doc.kind != "assoc":
            raise UsageError("thm4_8 takes a Hom-associative file")
        A = _assoc(doc)
        rep.field = A.field
        bad = assoc_violations(A)
        if bad:
            for v in bad:
                rep.witness(violation_witness(A.field, v, _ASSOC_TEMPLATES))
            return
        w = alpha_identity_witness(A)
        if w is not None:
            i, j, r = w
            rep.witness({"reason": "alpha-identity condition fails", "at": f"(i,j)=({_idx(i, j)})",
                         "expression": f"[e{i + 1},e{j + 1}] - [α(e{i + 1}),e{j + 1}]", "value": format_vector(A.field, r),
                         "residual": list(r)})
            return
        report = cyclic_exact_sequence(A)
        rep.add("degenerate", report.dims.get("[A,A]") == 0)
        _run_report(report, rep)
        return
    L = _valid_lie(args.file, rep)
    if L is None:
        return
    F = L.field
    n = L.dim
    try:
        if which == "prop2_9":
            M1 = parse_span(F, args.m1 or "0", n)
            M2 = parse_span(F, args.m2 or "all", n)
            N = parse_span(F, args.n or "all", n)
            report = right_exactness_from_ideals(L, M1, M2, N)
        elif which == "prop2_10":
            M = parse_span(F, args.m or "all", n)
            require_ideal(L, M, "M")
            report = tensor_square_sequence(L, M)
        elif which == "thm1_13":
            if args.module or args.act:
                if not (args.module and args.act):
                    raise UsageError("thm1_13 with a module needs both --module and --act")
                Mm = _valid_lie(args.module, rep)
                if Mm is None:
                    return
                act = _action(args.act, L, Mm)
                for v in act_mod.action_violations(act):
                    w = violation_witness(F, v, _ACTION_TEMPLATES)
                    w["action"] = args.act
                    rep.witness(w)
            else:
                act = module_from_ideal(L, parse_span(F, args.ideal or "0", n))
            seq = derivation_sequence_of_semidirect(act)
            for k in ("delta_injective", "image_equals_kernel", "rho_lands_in_hom"):
                rep.add(k, getattr(seq, k))
            for k, v in seq.dims.items():
                rep.add(f"dim {k}", v)
            if not seq.exact:
                rep.witness({"failing_checks": [k for k in ("delta_injective", "image_equals_kernel", "rho_lands_in_hom") if not getattr(seq, k)]})
            return
        elif which == "thm2_14":
            M = parse_span(F, args.m or "0", n)
            report = five_term_sequence(L, M)
        else:  # pragma: no cover - argparse restricts the choices
            raise UsageError(f"unknown verifier {which}")
    except PreconditionViolated as e:
        if which == "thm1_13" and isinstance(e.witness, tuple) and len(e.witness) == 3 and isinstance(e.witness[0], int):
            i, j, r = e.witness
            rep.witness({"reason": str(e), "at": f"(i,j)=({_idx(i, j)})",
                         "expression": f"^{{α(x{i + 1})}}m{j + 1} - ^{{x{i + 1}}}m{j + 1}",
                         "value": format_vector(F, r, "m"), "residual": list(r)})
        else:
            rep.witness(render_precondition(F, e))
        return
    _run_report(report, rep)


# ---------------------------------------------------------------------------
# argument parsing and dispatch


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable report")
    p = argparse.ArgumentParser(prog="homlie", description="Exact computations with Hom-Lie algebras.", parents=[common])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", parents=[common], help="check the axioms of an algebra or action file")
    s.add_argument("file")
    s.add_argument("--actor", help="acting algebra (for action files)")
    s.add_argument("--actee", help="algebra acted on (for action files)")

    s = sub.add_parser("invariants", parents=[common], help="center, derived algebra and perfectness flags")
    s.add_argument("file")

    s = sub.add_parser("homology", parents=[common], help="dimensions of H_0 .. H_K")
    s.add_argument("file")
    s.add_argument("--max-n", type=int, required=True, dest="max_n")
    s.add_argument("--coeffs", choices=("trivial", "adjoint"), default="trivial")

    s = sub.add_parser("tensor", parents=[common], help="non-abelian tensor product M * N")
    s.add_argument("m", metavar="M.hla")
    s.add_argument("n", metavar="N.hla")
    s.add_argument("--act-mn", dest="act_mn", help="action file of M on N")
    s.add_argument("--act-nm", dest="act_nm", help="action file of N on M")
    s.add_argument("--adjoint", action="store_true", help="M = N acting on itself by the bracket")
    s.add_argument("--trivial", action="store_true", help="trivial actions both ways")

    s = sub.add_parser("uce", parents=[common], help="universal central extension")
    s.add_argument("file")
    s.add_argument("--alpha", action="store_true", help="exterior construction for alpha-perfect algebras")

    s = sub.add_parser("cyclic", parents=[common], help="first cyclic homology of a Hom-associative algebra")
    s.add_argument("file")

    s = sub.add_parser("verify", parents=[common], help="check an exact sequence on an instance")
    s.add_argument("which", choices=VERIFIERS)
    s.add_argument("file")
    s.add_argument("--m1", help="prop2_9: the ideal M1 (default 0)")
    s.add_argument("--m2", help="prop2_9: the ideal M2 (default all)")
    s.add_argument("--n", help="prop2_9: the ideal N (default all)")
    s.add_argument("--m", help="prop2_10 / thm2_14: the ideal M")
    s.add_argument("--ideal", help="thm1_13: an abelian ideal used as module")
    s.add_argument("--module", help="thm1_13: module algebra file")
    s.add_argument("--act", help="thm1_13: action file of the algebra on the module")
    return p


COMMANDS = {
    "validate": cmd_validate,
    "invariants": cmd_invariants,
    "homology": cmd_homology,
    "tensor": cmd_tensor,
    "uce": cmd_uce,
    "cyclic": cmd_cyclic,
    "verify": cmd_verify,
}


def _inputs(args) -> dict:
    skip = {"command", "json", "which"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def run_command(argv) -> tuple:
    """Run one command; returns ``(exit code, report or None, error message or None)``."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return (0 if e.code == 0 else 2), None, None
    name = args.command + (f" {args.which}" if args.command == "verify" else "")
    rep = Report(name, _inputs(args))
    try:
        COMMANDS[args.command](args, rep)
    except UsageError as e:
        return 2, None, str(e)
    except (ShapeError, DimensionMismatch) as e:
        return 2, None, str(e)
    except (PreconditionViolated, AxiomViolation) as e:
        rep.witness(render_precondition(rep.field, e) if isinstance(e, PreconditionViolated) else {"reason": str(e)})
    except InternalInconsistency as e:
        rep.witness({"reason": f"internal consistency check failed: {e}"})
    except HomLieError as e:
        return 2, None, str(e)
    return (1 if rep.failed else 0), rep, None


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    code, rep, err = run_command(argv)
    if err is not None:
        print(f"homlie: error: {err}", file=sys.stderr)
    if rep is not None:
        if getattr(_parse_json_flag(argv), "json", False):
            print(json.dumps(rep.as_json(), indent=2, ensure_ascii=False))
        else:
            print(rep.as_text())
    return code


def _parse_json_flag(argv):
    ns = argparse.Namespace(json="--json" in argv)
    return ns


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
