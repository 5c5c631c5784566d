"""Theta pairing, Euler characteristics, local lengths, divisor classes."""

import pytest

from thetacas import (
    INFINITE,
    ClassExpression,
    FieldSpec,
    HypersurfaceRing,
    ModulePresentation,
    PolynomialRing,
    c1_torsion,
    chi_complex,
    chi_modules,
    dual_module,
    ext_module,
    finite_pd,
    koszul_complex,
    length,
    local_length_at_prime,
    present_cyclic,
    syzygy_of,
    theta,
    theta_class,
)
from thetacas.errors import (
    DimensionMismatch,
    NonIsolatedSingularity,
    NotFiniteLength,
    NotFinitePd,
)
from thetacas.homology import direct_sum
from thetacas.pairings import FreeComplex, MultiplicityAuditWarning


# ---------------------------------------------------------------------------
# lengths


def test_length_examples(node, S2):
    assert length(present_cyclic(node, ["x", "y"])) == 1
    assert length(ModulePresentation.cyclic(S2, ["x^2", "x*y", "y^3"])) == 4
    assert length(present_cyclic(node, ["x"])) is INFINITE


# ---------------------------------------------------------------------------
# theta


def test_theta_node_table(node_modules):
    Ax, Ay = node_modules["Ax"], node_modules["Ay"]
    assert theta(Ax, Ay) == 1
    assert theta(Ax, Ax) == -1
    assert theta(Ay, Ay) == -1


def test_theta_quadric_table(quadric_modules):
    Ap, Aq = quadric_modules["Ap"], quadric_modules["Aq"]
    assert theta(Ap, Aq) == -1
    assert theta(Ap, Ap) == 1
    assert theta(Aq, Aq) == 1


def test_theta_a1_surface_vanishes(a1, a1_modules):
    mods = dict(a1_modules)
    mods["W1"] = syzygy_of(a1_modules["Axz"], 1)
    names = list(mods)
    for a in names:
        for b in names:
            assert theta(mods[a], mods[b]) == 0


def test_theta_against_free_module(node, node_modules, quadric, quadric_modules):
    assert theta(node_modules["Ax"], ModulePresentation.free(node)) == 0
    assert theta(quadric_modules["Ap"], ModulePresentation.free(quadric)) == 0


def test_theta_symmetry(node_modules, quadric_modules):
    for mods in (node_modules, quadric_modules):
        items = list(mods.values())
        for M in items:
            for N in items:
                assert theta(M, N) == theta(N, M)


def test_theta_shift_antisymmetry(node_modules, quadric_modules):
    pairs = [
        (node_modules["Ax"], node_modules["Ay"]),
        (node_modules["Ax"], node_modules["Ax"]),
        (quadric_modules["Ap"], quadric_modules["Aq"]),
        (quadric_modules["Ap"], quadric_modules["Ap"]),
    ]
    for M, N in pairs:
        assert theta(syzygy_of(M, 1), N) == -theta(M, N)


def test_theta_direct_sum_additivity(node_modules, quadric_modules):
    for mods, probe in (
        (node_modules, "Ay"),
        (quadric_modules, "Aq"),
    ):
        names = [n for n in mods if n != probe][:2]
        M, Mp = mods[names[0]], mods[names[1] if len(names) > 1 else names[0]]
        N = mods[probe]
        assert theta(direct_sum(M, Mp), N) == theta(M, N) + theta(Mp, N)


def test_theta_dimension_vanishing(quadric):
    M = present_cyclic(quadric, ["x", "u"])  # dim 2
    N = present_cyclic(quadric, ["x", "u", "v"])  # dim 1
    assert theta(M, N) == 0


def test_theta_mcm_shortcut(quadric, quadric_modules):
    from thetacas.homology import tor_length

    M = syzygy_of(quadric_modules["Ap"], 4)  # stable syzygy, hence MCM
    N = quadric_modules["Aq"]
    assert tor_length(M, N, 2) - tor_length(M, N, 1) == theta(M, N)


def test_theta_nonisolated_singularity_raises():
    S = PolynomialRing(FieldSpec(0), ["x", "y"])
    A = HypersurfaceRing(S, S.parse("x^2"))
    M = present_cyclic(A, ["x"])
    with pytest.raises(NonIsolatedSingularity):
        theta(M, M)


def test_theta_char2_a1_surface_unchanged():
    # determined empirically: the golden values survive characteristic 2
    S = PolynomialRing(FieldSpec(2), ["x", "y", "z"])
    A = HypersurfaceRing(S, S.parse("x*y - z^2"))
    Axz = present_cyclic(A, ["x", "z"])
    Azy = present_cyclic(A, ["z", "y"])
    assert theta(Axz, Azy) == 0
    assert theta(Axz, Axz) == 0


def test_theta_char5_crosscheck():
    S = PolynomialRing(FieldSpec(5), ["x", "y", "u", "v"])
    A = HypersurfaceRing(S, S.parse("x*y - u*v"))
    Ap = present_cyclic(A, ["x", "u"])
    Aq = present_cyclic(A, ["x", "v"])
    assert theta(Ap, Aq) == -1
    assert theta(Ap, Ap) == 1


def test_syzygy_dual_probe_identity(node, quadric, node_modules, quadric_modules):
    """(-1)^l theta(dual(Omega^l N), T) = sum_i (-1)^i theta(Ext^i(N, A), T)."""
    corpora = [
        (node, [node_modules["Ax"], node_modules["k"]], [node_modules["Ay"]]),
        (quadric, [quadric_modules["Ap"]], [quadric_modules["Aq"]]),
    ]
    for _ring, corpus, probes in corpora:
        for N in corpus:
            for l in range(3):
                lhs_mod = dual_module(syzygy_of(N, l))
                exts = [ext_module(N, i) for i in range(l + 1)]
                for T in probes:
                    lhs = (-1) ** l * theta(lhs_mod, T)
                    rhs = sum((-1) ** i * theta(E, T) for i, E in enumerate(exts))
                    assert lhs == rhs


def test_theta_depends_only_on_divisor_class(quadric, quadric_modules):
    """Corpus modules with equal c1 pair equally against every probe."""
    Ap, Aq, Ax = (quadric_modules[n] for n in ("Ap", "Aq", "Ax"))
    primes = [("p", ["x", "u"]), ("q", ["x", "v"])]
    summed = direct_sum(Ap, Aq)
    assert c1_torsion(Ax, primes) == c1_torsion(summed, primes)
    for T in (Ap, Aq):
        assert theta(Ax, T) == theta(summed, T)


# ---------------------------------------------------------------------------
# theta on classes


def test_theta_class_examples(node_modules, quadric_modules):
    assert theta_class(
        ClassExpression.of("Ax", "Ay"), ClassExpression.of("Ax"), node_modules
    ) == 0
    assert theta_class(ClassExpression.of(), ClassExpression.of("Ax"), node_modules) == 0
    assert theta_class(
        ClassExpression.of(("Ap", 1), ("Aq", -1)),
        ClassExpression.of("Ap"),
        quadric_modules,
    ) == 2


def test_class_expression_canonical_form():
    a = ClassExpression.of(("M", 1), ("M", 2), ("N", 0))
    assert a.items() == [("M", 3)]
    assert (a + (-a)).items() == []


# ---------------------------------------------------------------------------
# Euler characteristics


def test_chi_complex_koszul(S2):
    K = koszul_complex(S2, ["x", "y"])
    registry = {
        "S": ModulePresentation.free(S2),
        "Sx": ModulePresentation.cyclic(S2, ["x"]),
    }
    assert chi_complex(K, ClassExpression.of("S"), registry) == 1
    assert chi_complex(K, ClassExpression.of("Sx"), registry) == 0
    assert chi_complex(K, ClassExpression.of(), registry) == 0


def test_chi_complex_shift_flips_sign(S2):
    K = koszul_complex(S2, ["x", "y"])
    registry = {"S": ModulePresentation.free(S2)}
    alpha = ClassExpression.of("S")
    assert chi_complex(K.shifted(), alpha, registry) == -chi_complex(K, alpha, registry)


def test_chi_complex_additive_in_class(S2):
    K = koszul_complex(S2, ["x", "y"])
    registry = {
        "S": ModulePresentation.free(S2),
        "k": ModulePresentation.cyclic(S2, ["x", "y"]),
    }
    a, b = ClassExpression.of("S"), ClassExpression.of("k")
    assert chi_complex(K, a + b, registry) == (
        chi_complex(K, a, registry) + chi_complex(K, b, registry)
    )


def test_chi_modules_examples(node, S2):
    k_reg = ModulePresentation.cyclic(S2, ["x", "y"])
    assert chi_modules(k_reg, ModulePresentation.free(S2)) == 1

    N0 = present_cyclic(node, ["x + y"])
    assert chi_modules(N0, present_cyclic(node, ["x"])) == 1
    assert chi_modules(N0, ModulePresentation.free(node)) == 2


def test_chi_modules_preconditions(node, node_modules):
    with pytest.raises(NotFiniteLength):
        chi_modules(node_modules["Ax"], node_modules["Ay"])
    with pytest.raises(NotFinitePd):
        chi_modules(node_modules["k"], node_modules["Ax"])


def test_finite_pd_examples(node):
    assert finite_pd(ModulePresentation.free(node)) == 0
    assert finite_pd(present_cyclic(node, ["x", "y"])) is None
    assert finite_pd(present_cyclic(node, ["x + y"])) == 1


# ---------------------------------------------------------------------------
# local lengths and c1


def test_local_length_examples(quadric):
    p = ["x", "u"]
    assert local_length_at_prime(present_cyclic(quadric, p), p) == 1
    assert local_length_at_prime(present_cyclic(quadric, ["x"]), p) == 1
    p_sq = ["x^2", "x*u", "u^2"]
    assert local_length_at_prime(present_cyclic(quadric, p_sq), p) == 2


def test_local_length_dimension_mismatch(quadric):
    with pytest.raises(DimensionMismatch):
        local_length_at_prime(
            present_cyclic(quadric, ["x"]), ["x", "u", "v"]
        )


def test_c1_examples(quadric, quadric_modules):
    primes = [("p", ["x", "u"]), ("q", ["x", "v"])]
    assert c1_torsion(quadric_modules["Ap"], primes).items() == [("p", 1)]
    assert c1_torsion(quadric_modules["Ax"], primes).items() == [("p", 1), ("q", 1)]
    k = present_cyclic(quadric, ["x", "y", "u", "v"])
    assert c1_torsion(k, primes).is_zero()


def test_c1_rejects_non_torsion(quadric):
    with pytest.raises(Exception):
        c1_torsion(ModulePresentation.free(quadric), [("p", ["x", "u"])])


def test_c1_audit_warns_on_missing_component(quadric, quadric_modules):
    with pytest.warns(MultiplicityAuditWarning):
        c1_torsion(quadric_modules["Ax"], [("p", ["x", "u"])])
