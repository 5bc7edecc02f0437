"""Cross-route identity checks run by ``posetcalc verify``."""

from __future__ import annotations

from dataclasses import dataclass

from .abindex import (
    AB_METHODS,
    EX_METHODS,
    EX_TILDE_METHODS,
    ab_index,
    ab_index_tilde,
    alpha_from_beta,
    ex_ab_index,
    ex_ab_index_tilde,
    expsi_via_beta_e,
    flag_alpha,
    flag_beta,
    omega_psi_closed_form,
    omega_psi_tilde_closed_form,
)
from .chow import canonical_decomposition_check, chow, gamma_expansion
from .ncpoly import iota, omega
from .polynomial import YPoly
from .poset import Poset, char_poly, chains_to_top, incidence_sum, poincare, poincare_from_charpoly
from .rlabeling import expsi_via_rlabeling, is_r_labeling

_ONE_PLUS_Y = YPoly((1, 1))


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.name}" + (f": {self.detail}" if self.detail and not self.ok else "")


def _all_equal(values: dict) -> tuple[bool, str]:
    items = list(values.items())
    ref_name, ref = items[0]
    for name, v in items[1:]:
        if v != ref:
            return False, f"{name} = {v} differs from {ref_name} = {ref}"
    return True, ""


def run_checks(P: Poset, labeling=None) -> list[Check]:
    checks: list[Check] = []

    def add(name: str, ok: bool, detail: str = "") -> None:
        checks.append(Check(name, bool(ok), detail))

    n = P.n
    add("incidence sum equals 1", incidence_sum(P) == YPoly.one(), str(incidence_sum(P)))
    add(
        "Poin(y) = (-y)^n chi(-1/y)",
        poincare(P) == poincare_from_charpoly(char_poly(P), n),
    )

    alpha = flag_alpha(P)
    beta = flag_beta(P, alpha)
    add("alpha total equals chain count", sum(alpha.values) == sum(1 for _ in chains_to_top(P)))
    add("beta/alpha round trip", alpha_from_beta(beta) == alpha)
    add(
        "beta(T) = 0 whenever 0 in T",
        all(b == 0 for T, b in beta.items() if T & 1),
    )

    psi_methods = AB_METHODS if n >= 1 else ("chains", "beta")
    psis = {m: ab_index(P, m) for m in psi_methods}
    ok, detail = _all_equal(psis)
    add("ab-index routes agree", ok, detail)
    psi = psis["chains"]

    ex_methods = EX_METHODS if n >= 1 else ("chains", "omega", "beta")
    exs = {m: ex_ab_index(P, m) for m in ex_methods}
    if n >= 1:
        exs["beta_e"] = expsi_via_beta_e(P)
    ok, detail = _all_equal(exs)
    add("extended ab-index routes agree", ok, detail)
    expsi = exs["chains"]
    add("exPsi at y=0 equals Psi", expsi.specialize_y(0) == psi)

    if n >= 1:
        psit = ab_index_tilde(P, "chains")
        psits = {m: ab_index_tilde(P, m) for m in AB_METHODS}
        psits["iota"] = iota(psi)
        ok, detail = _all_equal(psits)
        add("tilde ab-index routes agree", ok, detail)

        exts = {m: ex_ab_index_tilde(P, m) for m in EX_TILDE_METHODS}
        exts["iota"] = iota(expsi)
        exts["(1+y) omega(Psi~)"] = omega(psit) * _ONE_PLUS_Y
        ok, detail = _all_equal(exts)
        add("tilde extended ab-index routes agree", ok, detail)
        add("exPsi~ at y=0 equals Psi~", exts["chains"].specialize_y(0) == psit)

        add(
            "iota(omega(Psi)) = (1+y) omega(iota(Psi))",
            iota(omega(psi)) == omega(iota(psi)) * _ONE_PLUS_Y,
        )
        add("omega(Psi) recursion closed form", omega(psi) == omega_psi_closed_form(P))
        add("omega(Psi~) recursion closed form", omega(psit) == omega_psi_tilde_closed_form(P))

    for augmented in (True, False):
        if not augmented and n == 0:
            continue
        label = "augmented" if augmented else "plain"
        H = chow(P, augmented)
        g = gamma_expansion(P, augmented)
        add(f"gamma expansion reproduces {label} Chow polynomial", g.expand() == H, f"{g.expand()} vs {H}")
        add(f"{label} Chow routes agree", chow(P, augmented, "chains") == H)

    if n >= 1:
        report = canonical_decomposition_check(P)
        add("augmented canonical decomposition", report.augmented_ok,
            f"{report.augmented_lhs} vs {report.augmented_rhs}")
        add("plain canonical decomposition", report.plain_ok,
            f"{report.plain_lhs} vs {report.plain_rhs}")

    if labeling is not None:
        check = is_r_labeling(P, labeling)
        nonneg = all(v >= 0 for v in labeling.values()) if isinstance(labeling, dict) else True
        if check and nonneg and n >= 1:
            add("R-labeling expansion equals exPsi", expsi_via_rlabeling(P, labeling) == expsi)
    return checks
