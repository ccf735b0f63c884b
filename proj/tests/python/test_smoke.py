import pytest

import covlab


def test_compactness_verdicts():
    assert covlab.check_compact(covlab.sierpinski(), 1, covlab.family(1, [[0]]))["holds"]
    v = covlab.check_compact(covlab.discrete(2), 2, covlab.family(2, [[0], [1]]))
    assert not v["holds"]
    assert v["witness"]["values"] == [[0], [1]]


def test_cross_path_agreement():
    for seed in range(30):
        space = covlab.random_topology(3, seed)
        fam = covlab.random_family(2, 3, seed + 1000)
        a = covlab.check_compact(space, 2, fam)["holds"]
        b = covlab.check_compact_closed(space, 2, fam)["holds"]
        assert a == b


def test_duality():
    e = covlab.family(2, [[0], [1], [0, 1]])
    assert covlab.transversal_dual(e)["sets"] == [[0, 1]]
    d = covlab.principal_ultrafilter(0, 2)
    assert covlab.is_ultrafilter(d)
    assert covlab.transversal_dual(d) == d


def test_example_space_not_compact():
    b = covlab.family(2, [[0], [1]])
    space = covlab.example_space_a(2, b)
    assert not covlab.check_compact(space, 2, b)["holds"]


def test_theorem_reports_agree():
    rep = covlab.verify_theorem_e(covlab.sierpinski(), 2, covlab.family(2, [[0], [1]]))
    assert rep["agree"]
    assert len(rep["conditions"]) == 8
    out = covlab.fuzz_theorems(seed=0, count=25, max_points=3)
    assert out["all_agree"] and out["checked"] == 25


def test_budget_and_validation_errors():
    with pytest.raises(covlab.BudgetExceeded):
        covlab.check_compact(covlab.discrete(2), 2, covlab.family(2, [[0]]), budget=3)
    with pytest.raises(covlab.ValidationError):
        covlab.check_compact(
            covlab.topology(2, [[], [0]]), 1, covlab.family(1, [[0]])
        )
