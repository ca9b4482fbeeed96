"""Machine checks for the named claims about connected quandles.

Each checker returns a VerificationReport.  Theorem checks use status
pass/fail: a fail on a valid connected quandle means an implementation
bug.  Conjecture checks use status "report" and never assert; their
findings (including counterexamples, should any appear) are carried as
witnesses.

Report lines serialize as:

    CLAIM <id> <pass|fail|report> scope=<...> witness=<...>
"""
from __future__ import annotations

from dataclasses import dataclass

from .canon import (
    NotNaturallyOrdered,
    all_natural_reorderings,
    apply_reordering,
    automorphisms,
    brute_force_automorphisms,
    is_naturally_ordered,
    natural_reorderings_wrt,
    naturalize,
)
from .perm import Perm, are_conjugate, compose, inverse, power
from .quandle import (
    NotConnected,
    Quandle,
    check_formulas,
    is_connected,
    is_latin,
    profile,
    right_translation,
)

PASS = "pass"
FAIL = "fail"
REPORT = "report"


@dataclass(frozen=True)
class VerificationReport:
    claim: str
    status: str
    scope: str
    witness: str = "-"

    def line(self) -> str:
        return f"CLAIM {self.claim} {self.status} scope={self.scope} witness={self.witness}"


def _profile_lengths(q: Quandle) -> list[int]:
    """The block lengths l_1 <= ... <= l_k (profile minus the fixed 1)."""
    lengths = list(profile(q))
    lengths.remove(1)
    return lengths


def format_profile(prof: tuple[int, ...]) -> str:
    return "{" + ",".join(str(x) for x in prof) + "}"


def verify_automorphism_theorem(q: Quandle, scope: str = "?") -> VerificationReport:
    """Every automorphism of a naturally ordered quandle is a natural reordering."""
    if not is_naturally_ordered(q):
        raise NotNaturallyOrdered()
    natural = {nu.perm for nu in all_natural_reorderings(q)}
    for sigma in brute_force_automorphisms(q):
        if sigma not in natural:
            return VerificationReport(
                "THM-AUT", FAIL, scope, f"automorphism-not-natural:{sigma.image}"
            )
    return VerificationReport("THM-AUT", PASS, scope)


def _tail_fixing(nu: Perm, lengths: list[int]) -> bool:
    n = nu.n
    tail_start = sum(lengths[:-1]) + 1
    return all(nu(i) == i for i in range(tail_start, n + 1))


def _maps_max_block(nu: Perm, lengths: list[int]) -> bool:
    """Some block of maximal length is carried onto the last block positionally."""
    k = len(lengths)
    lk = lengths[-1]
    last_start = sum(lengths[:-1])
    for m in range(1, k + 1):
        if lengths[m - 1] != lk:
            continue
        start = sum(lengths[: m - 1])
        if all(nu(start + i) == last_start + i for i in range(1, lk + 1)):
            return True
    return False


def verify_canonical_theorem(q: Quandle, scope: str = "?") -> VerificationReport:
    """Every natural reordering's matrix is reachable w.r.t. r_n alone.

    For each natural reordering mu: (a) some nu natural w.r.t. r_n gives
    the same relabeled matrix; (b) some such nu carries a maximal-length
    block onto the last block; (c) when l_{k-1} < l_k (or k = 1), some
    such nu fixes the whole tail.  (b) and (c) are checked for a single
    simultaneous nu, the stronger reading.
    """
    if not is_naturally_ordered(q):
        raise NotNaturallyOrdered()
    lengths = _profile_lengths(q)
    if not lengths:  # order 1: everything is vacuous
        return VerificationReport("THM-CANON", PASS, scope)
    strict_tail = len(lengths) == 1 or lengths[-2] < lengths[-1]
    wrt_n = natural_reorderings_wrt(q, q.n)
    tables_wrt_n = [(nu, apply_reordering(q, nu).table) for nu in wrt_n]
    for mu in all_natural_reorderings(q):
        target = apply_reordering(q, mu).table
        matching = [nu for nu, t in tables_wrt_n if t == target]
        if not matching:
            return VerificationReport(
                "THM-CANON", FAIL, scope, f"no-matching-nu:mu={mu.perm.image}"
            )
        if not any(_maps_max_block(nu.perm, lengths) for nu in matching):
            return VerificationReport(
                "THM-CANON", FAIL, scope, f"no-block-mapping-nu:mu={mu.perm.image}"
            )
        if strict_tail and not any(_tail_fixing(nu.perm, lengths) for nu in matching):
            return VerificationReport(
                "THM-CANON", FAIL, scope, f"no-tail-fixing-nu:mu={mu.perm.image}"
            )
    return VerificationReport("THM-CANON", PASS, scope)


def check_conjecture_tail_fixing(q: Quandle, scope: str = "?") -> VerificationReport:
    """Report-only: tail-fixing nu exists even when l_{k-1} = l_k."""
    if not is_naturally_ordered(q):
        raise NotNaturallyOrdered()
    lengths = _profile_lengths(q)
    if len(lengths) < 2 or lengths[-2] != lengths[-1]:
        return VerificationReport("CONJ-TAIL", REPORT, scope, "not-applicable")
    wrt_n = natural_reorderings_wrt(q, q.n)
    tables_wrt_n = [(nu, apply_reordering(q, nu).table) for nu in wrt_n]
    for mu in all_natural_reorderings(q):
        target = apply_reordering(q, mu).table
        if not any(
            t == target and _tail_fixing(nu.perm, lengths)
            for nu, t in tables_wrt_n
        ):
            return VerificationReport(
                "CONJ-TAIL", REPORT, scope, f"violated:mu={mu.perm.image}"
            )
    return VerificationReport("CONJ-TAIL", REPORT, scope, "holds")


def check_conjecture_divisibility(
    catalog: list[tuple[str, Quandle]]
) -> list[VerificationReport]:
    """Report-only: the largest block length is a multiple of every other."""
    reports = []
    for name, q in catalog:
        lengths = _profile_lengths(q)
        if not lengths:
            reports.append(VerificationReport("CONJ-DIV", REPORT, name, "holds"))
            continue
        lk = lengths[-1]
        bad = [l for l in lengths if lk % l != 0]
        witness = "holds" if not bad else f"violated:profile={format_profile(profile(q))}"
        reports.append(VerificationReport("CONJ-DIV", REPORT, name, witness))
    return reports


def verify_latin_theorem(
    catalog: list[tuple[str, Quandle]]
) -> list[VerificationReport]:
    """Profile {1, n-1} forces latin; the converse is expected to fail."""
    reports = []
    for name, q in catalog:
        prof = profile(q)
        if prof == (1, q.n - 1):
            if is_latin(q):
                reports.append(VerificationReport("THM-LATIN", PASS, name))
            else:
                reports.append(
                    VerificationReport("THM-LATIN", FAIL, name, "not-latin")
                )
        elif q.n > 1 and is_latin(q):
            reports.append(
                VerificationReport(
                    "THM-LATIN-CONVERSE-FAILS",
                    REPORT,
                    name,
                    f"latin-with-profile={format_profile(prof)}",
                )
            )
    return reports


def verify_conjugacy_corollary(q: Quandle, scope: str = "?") -> VerificationReport:
    """All right translations of a connected quandle are mutually conjugate."""
    if not is_connected(q):
        raise NotConnected()
    translations = [right_translation(q, b) for b in range(1, q.n + 1)]
    for i in range(q.n):
        for j in range(i + 1, q.n):
            ok, w = are_conjugate(translations[i], translations[j])
            if not ok:
                return VerificationReport(
                    "COR-CONJ", FAIL, scope, f"pair=({i + 1},{j + 1})"
                )
            assert w is not None
    return VerificationReport("COR-CONJ", PASS, scope)


def check_lr_conjugation_formula(q: Quandle, scope: str = "?") -> VerificationReport:
    """Report-only: for profile {1, n-1} in block form, test whether

        r_k = r_n^k r_{n-1} r_n^k     (as printed)
        r_k = r_n^k r_{n-1} r_n^{-k}  (sign variant)

    holds for all k in 1..n-2, composing right-to-left.
    """
    n = q.n
    if profile(q) != (1, n - 1) or not is_naturally_ordered(q):
        return VerificationReport("LR-FORMULA", REPORT, scope, "not-applicable")
    rn = right_translation(q, n)
    rn1 = right_translation(q, n - 1)
    printed = all(
        right_translation(q, k)
        == compose(power(rn, k), compose(rn1, power(rn, k)))
        for k in range(1, n - 1)
    )
    variant = all(
        right_translation(q, k)
        == compose(power(rn, k), compose(rn1, power(rn, -k)))
        for k in range(1, n - 1)
    )
    held = [
        name
        for name, ok in (("printed", printed), ("sign-variant", variant))
        if ok
    ]
    witness = "holds:" + ",".join(held) if held else "neither-variant-holds"
    return VerificationReport("LR-FORMULA", REPORT, scope, witness)


def verify_group_lemmas(q: Quandle, scope: str = "?") -> VerificationReport:
    """Natural reorderings w.r.t. r_n form a group; composing one after a
    natural reordering w.r.t. any r_q stays natural w.r.t. r_q."""
    if not is_naturally_ordered(q):
        raise NotNaturallyOrdered()
    wrt_n = {nu.perm for nu in natural_reorderings_wrt(q, q.n)}
    for p in wrt_n:
        if inverse(p) not in wrt_n:
            return VerificationReport(
                "LEM-GROUP", FAIL, scope, f"inverse-escapes:{p.image}"
            )
        for r in wrt_n:
            if compose(p, r) not in wrt_n:
                return VerificationReport(
                    "LEM-GROUP", FAIL, scope,
                    f"composition-escapes:{p.image}o{r.image}",
                )
    for elt in range(1, q.n + 1):
        wrt_q = {mu.perm for mu in natural_reorderings_wrt(q, elt)}
        for mu in wrt_q:
            for nu in wrt_n:
                if compose(nu, mu) not in wrt_q:
                    return VerificationReport(
                        "LEM-GROUP", FAIL, scope,
                        f"mixed-composition-escapes:q={elt}",
                    )
    return VerificationReport("LEM-GROUP", PASS, scope)


def verify_formulas(q: Quandle, scope: str = "?") -> VerificationReport:
    ok, witness = check_formulas(q)
    if ok:
        return VerificationReport("FORMULAS", PASS, scope)
    return VerificationReport("FORMULAS", FAIL, scope, f"triple={witness}")


def verify_oracle_agreement(q: Quandle, scope: str = "?") -> VerificationReport:
    """automorphisms() agrees with the brute-force scan (n <= 9)."""
    if not is_naturally_ordered(q):
        raise NotNaturallyOrdered()
    fast = sorted(nu.perm.image for nu in automorphisms(q))
    slow = sorted(p.image for p in brute_force_automorphisms(q))
    if fast != slow:
        return VerificationReport(
            "AUT-ORACLE", FAIL, scope, f"fast={len(fast)} slow={len(slow)}"
        )
    return VerificationReport("AUT-ORACLE", PASS, scope)


def verify_all(catalog: list[tuple[str, Quandle]]) -> list[VerificationReport]:
    """Run every checker over a catalog of (name, connected quandle).

    Per-quandle checks run on the naturalized representative.  Theorem
    failures are collected, not raised; callers decide severity.
    """
    reports: list[VerificationReport] = []
    naturalized: list[tuple[str, Quandle]] = []
    for name, q in catalog:
        nat, _ = naturalize(q)
        naturalized.append((name, nat))
        reports.append(verify_formulas(q, name))
        reports.append(verify_conjugacy_corollary(q, name))
        reports.append(verify_canonical_theorem(nat, name))
        reports.append(verify_group_lemmas(nat, name))
        if nat.n <= 9:
            reports.append(verify_automorphism_theorem(nat, name))
        reports.append(check_lr_conjugation_formula(nat, name))
        reports.append(check_conjecture_tail_fixing(nat, name))
    reports.extend(verify_latin_theorem(naturalized))
    reports.extend(check_conjecture_divisibility(naturalized))
    orders = {name: q.n for name, q in catalog}
    reports.sort(key=lambda r: (orders.get(r.scope, 0), r.scope, r.claim))
    return reports


def theorem_failures(reports: list[VerificationReport]) -> list[VerificationReport]:
    return [r for r in reports if r.status == FAIL]
