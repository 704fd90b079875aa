"""Named structural checks grouped into suites for the verify command."""
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Dict, List

import numpy as np

from core import z4poly
from core.enumerators import binary_macwilliams, enumerator_from_rows, macwilliams
from core.ring import (
    differences_are_distinct,
    differences_avoid_powers,
    get_ring,
    graeffe_lift,
    signed_sums_are_units,
    zero_sums_are_trivial,
)
from core.z4 import (
    BinaryVector,
    Z4Vector,
    all_vectors,
    gray_carry_rule_holds,
    gray_map,
    gray_map_rows,
    gray_sum_rule_holds,
    lee_weights_rows,
    z4_linearity_condition,
)
from models import CheckReport
from services import analysis, cosets, graphs, transforms
from services.codes import (
    binary_codewords,
    delsarte_goethals,
    goethals,
    kerdock,
    kerdock_binary_form,
    kerdock_codeword,
    kerdock_polynomial,
    octacode,
    preparata,
    preparata_span_witness,
    qrm,
    rm_generator,
    same_binary_code,
    same_code,
    zrm,
)
from services.decoders import (
    brute_force_nearest,
    family_a_correlations,
    kerdock_candidates,
    kerdock_soft_decode,
    kerdock_soft_decode_brute,
    preparata_decode,
)

logger = logging.getLogger(__name__)

SUITE_NAMES = ("core", "rings", "kerdock", "preparata", "goethals", "graphs")

Check = Callable[[np.random.Generator], CheckReport]


def report(name: str, suite: str, expected, computed, passed=None, **parameters) -> CheckReport:
    return CheckReport(
        name=name,
        suite=suite,
        parameters={k: str(v) for k, v in parameters.items()},
        expected=str(expected),
        computed=str(computed),
        passed=(expected == computed) if passed is None else bool(passed),
    )


# -- core

def check_gray_table(rng) -> CheckReport:
    images = [str(gray_map(Z4Vector([c]))) for c in range(4)] + [str(gray_map(Z4Vector([1, 2, 3, 0])))]
    return report("gray map symbol table", "core", ["00", "01", "11", "10", "01101100"], images)


def check_isometry(rng) -> CheckReport:
    small = all_vectors(2)
    a = np.repeat(small, len(small), axis=0)
    b = np.tile(small, (len(small), 1))
    ra, rb = rng.integers(0, 4, size=(10000, 8)), rng.integers(0, 4, size=(10000, 8))
    ok = True
    for x, y in ((a, b), (ra, rb)):
        hamming = np.count_nonzero(gray_map_rows(x) != gray_map_rows(y), axis=1)
        ok &= bool(np.array_equal(hamming, lee_weights_rows((x - y) % 4)))
    return report("gray map is an isometry", "core", True, ok, n="2 exhaustive, 8 random")


def check_gray_rules(rng) -> CheckReport:
    small = all_vectors(2)
    a = np.repeat(small, len(small), axis=0)
    b = np.tile(small, (len(small), 1))
    ra, rb = rng.integers(0, 4, size=(10000, 8)), rng.integers(0, 4, size=(10000, 8))
    ok = all(
        bool(rule(x, y).all())
        for rule in (gray_sum_rule_holds, gray_carry_rule_holds)
        for x, y in ((a, b), (ra, rb))
    )
    return report("gray sum and carry rules", "core", True, ok, n="2 exhaustive, 8 random")


def check_octacode_swe(rng) -> CheckReport:
    expected = {(8, 0, 0): 1, (0, 8, 0): 16, (0, 0, 8): 1, (4, 0, 4): 14, (3, 4, 1): 112, (1, 4, 3): 112}
    swe = enumerator_from_rows(octacode().codewords(), "swe")
    return report("octacode symmetrized enumerator", "core", sorted(expected.items()), sorted(swe.terms.items()))


def check_octacode_self_dual(rng) -> CheckReport:
    swe = enumerator_from_rows(octacode().codewords(), "swe")
    return report("octacode swe is MacWilliams self-dual", "core", swe.terms, macwilliams(swe, 256).terms)


def check_macwilliams_kerdock(rng) -> CheckReport:
    lee_k = enumerator_from_rows(kerdock(3).codewords(), "lee")
    lee_p = enumerator_from_rows(preparata(3).codewords(), "lee")
    dual = macwilliams(lee_k, kerdock(3).size)
    binary_k = lee_k.distribution()
    binary_p = binary_macwilliams(binary_k, kerdock(3).size)
    ok = dual == lee_p and binary_p == lee_p.distribution()
    return report("MacWilliams maps K to P", "core", True, ok, m=3)


def check_linearity_conditions(rng) -> CheckReport:
    results = {}
    for name, code in (("octacode", octacode()), ("ZRM(1,3)", zrm(1, 3)), ("ZRM(2,3)", zrm(2, 3))):
        words = [BinaryVector(row) for row in gray_map_rows(code.codewords())]
        if code.size > 1024:
            basis = [BinaryVector(row) for row in rm_generator(2, 4)]
            ok, _ = z4_linearity_condition(words, linear=True, basis=basis)
        else:
            ok, _ = z4_linearity_condition(words)
        results[name] = ok
    return report("Gray images close under the linearity rule", "core", {k: True for k in results}, results)


def check_zrm_images(rng) -> CheckReport:
    results = {}
    for r in (1, 2):
        image = {row.tobytes() for row in gray_map_rows(zrm(r, 3).codewords())}
        reference = {row.tobytes() for row in binary_codewords(rm_generator(r, 4))}
        results[f"ZRM({r},3)"] = image == reference
    return report("Gray image of ZRM(r,3) is RM(r,4)", "core", {k: True for k in results}, results)


# -- rings

def check_graeffe(rng) -> CheckReport:
    computed = [z4poly.to_string(graeffe_lift("1101")), z4poly.to_string(graeffe_lift("101001"))]
    return report("Graeffe lift", "rings", ["3121", "323001"], computed)


def check_kerdock_polynomials(rng) -> CheckReport:
    computed = [z4poly.to_string(kerdock_polynomial(3)), z4poly.to_string(kerdock_polynomial(5, monic=False))]
    return report("Kerdock generator polynomials", "rings", ["3121", "11120122010303133013212213"], computed)


def check_additive_table(rng) -> CheckReport:
    ring = get_ring(3)
    computed = [str(ring.xi(k)) for k in range(ring.n)]
    return report("additive table of ξ^k", "rings", ["100", "010", "001", "132", "233", "331", "121"], computed, m=3)


def check_teichmuller_properties(rng) -> CheckReport:
    computed = {}
    for m in (3, 5):
        ring = get_ring(m)
        computed[m] = [
            signed_sums_are_units(ring),
            differences_avoid_powers(ring),
            differences_are_distinct(ring),
            zero_sums_are_trivial(ring),
        ]
    expected = {m: [None] * 4 for m in (3, 5)}
    return report("Teichmüller sum and difference properties", "rings", expected, computed)


def check_character_sum(rng) -> CheckReport:
    computed = {m: transforms.unit_character_sum(get_ring(m)) for m in (3, 5)}
    return report("unit character sum vanishes", "rings", {3: (0, 0), 5: (0, 0)}, computed)


def check_trace_forms(rng) -> CheckReport:
    ring = get_ring(3)
    ok = all(ring.trace(c) == ring.trace_by_orbit(c) for c in ring.elements())
    return report("linear trace equals the Frobenius orbit sum", "rings", True, ok, m=3)


# -- kerdock

def check_octacode_equals_kerdock(rng) -> CheckReport:
    return report("kerdock(3) is the octacode", "kerdock", True, same_code(kerdock(3), octacode()))


def check_kerdock_distributions(rng) -> CheckReport:
    computed, expected = {}, {}
    for m in (3, 4, 5):
        computed[m] = analysis.weight_distribution(kerdock(m, allow_even=(m % 2 == 0))).counts
        expected[m] = analysis.kerdock_weight_formula(m)
    return report("Kerdock weight distributions", "kerdock", expected, computed)


def check_kerdock_binary_form(rng) -> CheckReport:
    ok = True
    for m in (3, 5):
        ring = get_ring(m)
        for _ in range(20):
            lam = ring.element(rng.integers(0, 4, size=m))
            eps = int(rng.integers(0, 4))
            word = kerdock_codeword(ring, lam, eps)
            a_bits, b_bits = kerdock_binary_form(ring, lam, eps)
            ok &= bool(np.array_equal(a_bits, word.alpha) and np.array_equal(b_bits, word.beta))
    return report("binary Kerdock description matches the Gray image", "kerdock", True, ok, samples=20)


def check_family_a(rng) -> CheckReport:
    computed = {m: sorted(set(family_a_correlations(get_ring(m)))) for m in (3, 5)}
    return report("family A correlations |1+S|^2", "kerdock", {3: [8], 5: [32]}, computed)


def check_soft_decoder(rng) -> CheckReport:
    ring = get_ring(3)
    candidates = kerdock_candidates(ring)
    constellation = np.array([1, 1j, -1, -1j])
    mismatches = 0
    for _ in range(1000):
        sent = candidates[rng.integers(0, len(candidates))]
        noisy = constellation[sent] + 0.7 * (rng.standard_normal(8) + 1j * rng.standard_normal(8))
        fast = kerdock_soft_decode(ring, noisy)
        slow = kerdock_soft_decode_brute(ring, noisy, candidates)
        if fast.codeword != slow.codeword and abs(fast.score - slow.score) > 1e-9:
            mismatches += 1
    return report("FHT decoder agrees with exhaustive correlation", "kerdock", 0, mismatches, trials=1000)


def check_distance_invariance(rng) -> CheckReport:
    ok, _ = analysis.distance_invariance_check(gray_map_rows(octacode().codewords()))
    return report("Gray image of the octacode is distance invariant", "kerdock", True, ok)


def check_qrm_is_kerdock(rng) -> CheckReport:
    computed = {m: same_code(qrm(1, m), kerdock(m)) for m in (3, 5)}
    return report("QRM(1,m) is the Kerdock code", "kerdock", {3: True, 5: True}, computed)


# -- preparata

def _all_words_m3() -> np.ndarray:
    return all_vectors(8)


def check_transform_membership(rng) -> CheckReport:
    ring = get_ring(3)
    words = _all_words_m3()
    reference = preparata(3).contains_rows(words)
    b, ab = np.split(gray_map_rows(words).astype(np.int64), 2, axis=1)
    computed = {
        "ring transform": bool(np.array_equal(transforms.preparata_member_z4_rows(ring, words), reference)),
        "field transforms": bool(np.array_equal(transforms.preparata_member_binary_rows(ring, b, ab), reference)),
        "classical": bool(np.array_equal(transforms.preparata_member_classical_rows(ring, b, ab), reference)),
    }
    return report("transform membership agrees with syndromes", "preparata", {k: True for k in computed}, computed, m=3)


def check_decoder_m3(rng) -> CheckReport:
    code = preparata(3)
    words = code.codewords()
    failures = 0
    for e in cosets._patterns(8, 3)[1:].astype(np.int64):
        weight = int(lee_weights_rows(e))
        for i, c in enumerate(words):
            v = (c + e) % 4
            result = preparata_decode(Z4Vector(v))
            distance, nearest = brute_force_nearest(words, v)
            if weight <= 2:
                failures += (
                    result.status != "corrected"
                    or result.error != "".join(map(str, e))
                    or list(nearest) != [i]
                )
            elif result.status == "corrected":
                # a resolution is legal only at the oracle distance
                failures += result.applied_weight != distance
            else:
                failures += i not in nearest
    return report("Preparata decoder at m=3", "preparata", 0, failures, patterns="Lee weight <= 3", codewords=len(words))


def check_decoder_m5(rng) -> CheckReport:
    code = preparata(5)
    failures = 0
    infos = np.concatenate([rng.integers(0, 4, size=(200, code.k1)), rng.integers(0, 2, size=(200, code.k2))], axis=1)
    words = code.encode_rows(infos)
    singles = [(p, v) for p in range(code.length) for v in (1, 3)]
    for c in words:
        for p, v in singles:
            e = np.zeros(code.length, dtype=np.int64)
            e[p] = v
            result = preparata_decode(Z4Vector((c + e) % 4))
            failures += result.status != "corrected" or result.error_positions != [p]
    for _ in range(2000):
        c = words[rng.integers(0, len(words))]
        e = np.zeros(code.length, dtype=np.int64)
        if rng.random() < 0.2:
            e[rng.integers(0, code.length)] = 2
        else:
            e[rng.choice(code.length, size=2, replace=False)] = rng.choice([1, 3], size=2)
        result = preparata_decode(Z4Vector((c + e) % 4))
        failures += result.status != "corrected" or result.error != "".join(map(str, e))
    return report("Preparata decoder at m=5", "preparata", 0, failures, codewords=200, doubles=2000)


def check_preparata_distance(rng) -> CheckReport:
    computed = {
        3: analysis.weight_distribution(preparata(3)).minimum_distance,
        5: cosets.minimum_lee_distance_by_syndromes(preparata(5), 3),
    }
    return report("minimum Lee distance of P", "preparata", {3: 6, 5: 6}, computed)


def check_preparata_cosets(rng) -> CheckReport:
    table = cosets.CosetTable(preparata(3))
    rows = cosets.outer_distribution(table)
    far = {row[4] for row in (cosets.coset_distribution(table.code, x) for x in table.leaders(4))}
    computed = {"covering radius": table.covering_radius, "distinct rows": len(rows), "B_x4": sorted(far)}
    return report("P(3) is completely regular", "preparata", {"covering radius": 4, "distinct rows": 5, "B_x4": [20]}, computed)


def check_designs(rng) -> CheckReport:
    image_p = gray_map_rows(preparata(3).codewords())
    design = analysis.design_check(analysis.blocks_of_weight(image_p, 6), 3, 16)
    image_z = gray_map_rows(zrm(2, 3).codewords())
    steiner = analysis.design_check(analysis.blocks_of_weight(image_z, 4), 3, 16)
    computed = {"3-(16,6)": (design.blocks, design.lam), "S(3,4,16)": (steiner.blocks, steiner.lam)}
    return report("designs at m=3", "preparata", {"3-(16,6)": (112, 4), "S(3,4,16)": (140, 1)}, computed)


def check_preparata_nonlinear(rng) -> CheckReport:
    a, b, w = preparata_span_witness(5)
    linear3, _ = analysis.image_is_linear(preparata(3))
    computed = {"m=3 image linear": linear3, "m=5 witness in P": preparata(5).contains(w)}
    return report("Gray image of P is nonlinear", "preparata", {"m=3 image linear": False, "m=5 witness in P": False}, computed)


def check_inclusion_chain(rng) -> CheckReport:
    computed = {m: analysis.inclusion_chain(m) for m in (3, 5)}
    # ZRM(2,3) is not self-orthogonal, so its link is reported but not required at m=3
    ok = all(holds for _, holds in computed[5]) and all(holds for i, (_, holds) in enumerate(computed[3]) if i != 2)
    return report("inclusion chain", "preparata", True, ok, passed=ok, links=computed)


def check_automorphisms(rng) -> CheckReport:
    ring = get_ring(3)
    computed = {}
    for name, code in (("K", kerdock(3)), ("P", preparata(3)), ("G", goethals(3))):
        kept, _ = analysis.affine_invariance(code, ring)
        computed[name] = (kept, analysis.frobenius_invariant(code, ring), analysis.negation_invariant(code))
    transposition = list(range(8))
    transposition[1], transposition[2] = 2, 1
    computed["transposition on K"] = analysis.is_automorphism(kerdock(3), transposition)
    expected = {"K": (56, True, True), "P": (56, True, True), "G": (56, True, True), "transposition on K": False}
    return report("affine, Frobenius and negation invariance", "preparata", expected, computed, m=3)


# -- goethals

def check_goethals_small(rng) -> CheckReport:
    g = goethals(3)
    dg = delsarte_goethals(3, 1)
    computed = {
        "size": g.size,
        "goethals distance": analysis.weight_distribution(g).minimum_distance,
        "DG(3,1) distance": analysis.weight_distribution(dg).minimum_distance,
    }
    expected = {"size": 32, "goethals distance": 8, "DG(3,1) distance": 4}
    return report("Goethals and Delsarte-Goethals codes at m=3", "goethals", expected, computed)


def check_goethals_transforms(rng) -> CheckReport:
    ring = get_ring(3)
    words = _all_words_m3()
    reference = goethals(3).contains_rows(words)
    b, ab = np.split(gray_map_rows(words).astype(np.int64), 2, axis=1)
    computed = {
        "ring transform": bool(np.array_equal(transforms.dg_transform_conditions(ring, words, 1), reference)),
        "field transforms": bool(np.array_equal(transforms.goethals_member_binary_rows(ring, b, ab), reference)),
        "binary Goethals size": int(transforms.goethals_member_original_rows(ring, b, ab).sum()),
    }
    expected = {"ring transform": True, "field transforms": True, "binary Goethals size": 32}
    return report("Goethals transform descriptions", "goethals", expected, computed, m=3)


def check_goethals_m5(rng) -> CheckReport:
    distance = cosets.minimum_lee_distance_by_syndromes(goethals(5), 4)
    return report("minimum Lee distance of goethals(5)", "goethals", 8, distance)


def check_qrm_structure(rng) -> CheckReport:
    computed, expected = {}, {}
    for m in (3, 5):
        for r in range(-1, m + 1):
            computed[f"dual m={m} r={r}"] = same_code(qrm(r, m).dual(), qrm(m - r - 1, m))
            expected[f"dual m={m} r={r}"] = True
    for m in (3, 4):
        for r in range(0, m + 1):
            residue = qrm(r, m).residue_code()
            computed[f"residue m={m} r={r}"] = same_binary_code(residue, rm_generator(r, m, "cyclic", get_ring(m)))
            expected[f"residue m={m} r={r}"] = True
    return report("QRM duality and residue codes", "goethals", expected, computed)


def check_qrm_spectral(rng) -> CheckReport:
    ring = get_ring(3)
    words = _all_words_m3()
    computed = {r: int(transforms.qrm_spectral_rows(ring, words, r).sum()) for r in range(0, 4)}
    expected = {r: qrm(r, 3).size for r in range(0, 4)}
    return report("QRM spectral description", "goethals", expected, computed, m=3)


# -- graphs

def check_coset_graph(rng) -> CheckReport:
    graph = graphs.coset_graph(3)
    params = graphs.drg_parameters(graph)
    computed = {
        "vertices": params.vertices,
        "b": params.b[:-1],
        "c": params.c[1:],
        "a": params.a,
        "valencies": params.valencies,
        "eigenmatrix": params.eigenmatrix,
        "bipartite": graphs.is_bipartite_by_parity(graph),
        "closed form at N=64": graphs.eigenmatrix_from_intersection_array(*graphs.coset_graph_intersection_array(64)),
    }
    expected = {
        "vertices": 256,
        "b": [16, 15, 14, 1],
        "c": [1, 2, 15, 16],
        "a": [0] * 5,
        "valencies": [1, 16, 120, 112, 7],
        "eigenmatrix": graphs.coset_graph_eigenmatrix(16),
        "bipartite": True,
        "closed form at N=64": graphs.coset_graph_eigenmatrix(64),
    }
    return report("coset graph Γ_3", "graphs", expected, computed)


def check_odd_distances(rng) -> CheckReport:
    graph = graphs.coset_graph(3)
    distances = graphs.distance_layers(graph)
    ok = graphs.odd_distance_is_complete_bipartite(graph, distances)
    return report("R1 + R3 is complete bipartite", "graphs", True, ok, m=3)


def check_distance_three_experiment(rng) -> CheckReport:
    regular = graphs.distance_three_graph_is_regular(graphs.coset_graph(3))
    return report("distance-3 graph regularity (informational)", "graphs", "reported", regular, passed=True, m=3)


SUITES: Dict[str, List[Check]] = {
    "core": [
        check_gray_table, check_isometry, check_gray_rules, check_octacode_swe,
        check_octacode_self_dual, check_macwilliams_kerdock, check_linearity_conditions, check_zrm_images,
    ],
    "rings": [
        check_graeffe, check_kerdock_polynomials, check_additive_table,
        check_teichmuller_properties, check_character_sum, check_trace_forms,
    ],
    "kerdock": [
        check_octacode_equals_kerdock, check_kerdock_distributions, check_kerdock_binary_form,
        check_family_a, check_soft_decoder, check_distance_invariance, check_qrm_is_kerdock,
    ],
    "preparata": [
        check_transform_membership, check_decoder_m3, check_decoder_m5, check_preparata_distance,
        check_preparata_cosets, check_designs, check_preparata_nonlinear, check_inclusion_chain,
        check_automorphisms,
    ],
    "goethals": [
        check_goethals_small, check_goethals_transforms, check_goethals_m5,
        check_qrm_structure, check_qrm_spectral,
    ],
    "graphs": [check_coset_graph, check_odd_distances, check_distance_three_experiment],
}


def run_suite(suite: str, seed: int, workers: int = 1) -> List[CheckReport]:
    """Run a suite (or "all"); each check gets its own child seed so order and pool size do not matter."""
    names = SUITE_NAMES if suite == "all" else (suite,)
    checks = [check for name in names for check in SUITES[name]]
    children = np.random.SeedSequence(seed).spawn(len(checks))

    def run(job) -> CheckReport:
        check, child = job
        logger.info(f"running {check.__name__}")
        return check(np.random.default_rng(child))

    jobs = list(zip(checks, children))
    if workers <= 1:
        return [run(job) for job in jobs]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(run, jobs))
