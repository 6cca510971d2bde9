import pytest

from auslander.correspondence import ClusterTiltingInstance
from auslander.exactla import Field
from auslander.families import FamilySpec, generate_family
from auslander.modules import class_index, direct_sum
from auslander.standard import standard_modules

# the families named in the acceptance criteria
BATTERY_FAMILIES = [
    ("linear_An", 2),
    ("linear_An", 3),
    ("loop_nakayama", 2),
    ("loop_nakayama", 3),
    ("An_rad_square", 3),
]

_FAMILIES = {}


def family(kind, n, field=None):
    key = (kind, n, field)
    if key not in _FAMILIES:
        _FAMILIES[key] = generate_family(FamilySpec(kind, n, field or Field("Q")))
    return _FAMILIES[key]


def designated(fam, name):
    return next(d for d in fam.designated if d.name == name)


def instance(fam, members, d):
    m, _, _ = direct_sum([fam.catalogue[i] for i in members], fam.algebra)
    return ClusterTiltingInstance(fam.algebra, m, d, fam.catalogue)


def battery():
    """Designated modules of every battery family, every single summand and
    every all-but-one sub-sum of them, each at d = 1 and d = 2.

    Yields (key, family, members, d); keys are unique and sortable.
    """
    out = []
    for kind, n in BATTERY_FAMILIES:
        fam = family(kind, n)
        seen = set()
        for des in fam.designated:
            mem = tuple(des.members)
            subsets = {mem} | {(k,) for k in mem}
            if len(mem) > 1:
                subsets |= {tuple(x for x in mem if x != k) for k in mem}
            for sub in sorted(subsets):
                if sub in seen:
                    continue
                seen.add(sub)
                for d in (1, 2):
                    out.append(((kind, n, sub, d), fam, sub, d))
    return out


def is_generator_cogenerator(fam, members) -> bool:
    st = standard_modules(fam.algebra)
    need = {class_index(p.module, fam.catalogue) for p in st.projectives}
    need |= {class_index(q, fam.catalogue) for q in st.injectives}
    return need <= set(members)


@pytest.fixture(scope="session")
def a2():
    return family("linear_An", 2)


@pytest.fixture(scope="session")
def a3():
    return family("linear_An", 3)


@pytest.fixture(scope="session")
def dual_numbers():
    return family("loop_nakayama", 2)


@pytest.fixture(scope="session")
def rad3():
    return family("An_rad_square", 3)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(mod.RESULTS, key=lambda k: (k.split("-")[0], k)):
        terminalreporter.write_line(mod.RESULTS[key])
