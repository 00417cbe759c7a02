import pytest

from tautilt.subcat import (Subcat, UnknownModule, ext_injectives, ext_projectives, fac_members,
                            in_fac, is_extension_closed, is_torsion_class, left_approximation,
                            parse_spec, right_approximation, sub_members, whole)


def names(C):
    return set(C.name.split("+")) if len(C) else set()


def test_parse_spec(pool, spec):
    T = spec("1/2 + 2+2")
    assert T.name == "2+1/2" and len(T) == 2
    assert len(spec("0")) == 0
    with pytest.raises(UnknownModule, match="unknown module '9/9'"):
        parse_spec(pool, "9/9")


def test_fac_in_module_category(spec):
    assert names(fac_members(spec("2+2/3+1/2"))) == {"2", "1", "2/3", "1/2"}
    assert names(fac_members(spec("2/3"))) == {"2", "2/3"}
    assert names(fac_members(spec("0"))) == set()


def test_fac_relative_to_ambient(E, spec):
    assert names(E.fac(spec("1+2/3"))) == {"1", "2/3"}
    # 2 is a quotient of 2/3 in mod but the kernel 3 leaves the ambient
    assert not in_fac(spec("2/3"), spec("2").reps()[0], E.ambient)
    assert in_fac(spec("2/3"), spec("2").reps()[0])
    assert names(E.fac(spec("2/3"))) == {"2/3"}


def test_sub(spec):
    assert names(sub_members(spec("2/3"))) == {"3", "2/3"}


def test_left_approximation_kernel(pool, spec):
    P2 = pool.members[pool.index("2/3")]
    ap = left_approximation(P2, spec("1/2+1"))
    assert ap.minimal and ap.left
    assert pool.name(ap.components) == "1/2"
    K, _ = ap.kernel()
    assert pool.name(k for k, _ in pool.components(K)) == "3"


def test_right_approximation_is_epi_on_fac(pool, spec):
    T = spec("2+2/3+1/2")
    for k in fac_members(T).indices:
        ap = right_approximation(pool.members[k], T)
        assert ap.map.is_epi() and not ap.left


def test_ext_projectives(pool, E, spec):
    assert ext_projectives(E.ambient).name == "2+2/3+1/2"
    assert ext_projectives(whole(pool)).name == "3+2/3+1/2"
    assert ext_injectives(whole(pool)).name == "1+2/3+1/2"


def test_extension_closure(pool, spec):
    v = is_extension_closed(spec("3+2+1"))
    assert not v and v.exact and "1/2" in v.witness
    assert is_extension_closed(whole(pool))
    assert is_extension_closed(fac_members(spec("2+2/3+1/2")))


def test_torsion_classes(pool, spec):
    assert is_torsion_class(fac_members(spec("2+2/3+1/2")))
    assert not is_torsion_class(spec("2/3"))
    assert is_torsion_class(whole(pool)) and is_torsion_class(spec("0"))


def test_subcat_identity(pool):
    a, b = Subcat(pool, (4, 0, 4)), Subcat(pool, (0, 4))
    assert a == b and hash(a) == hash(b) and a.indices == (0, 4)
    with pytest.raises(IndexError):
        Subcat(pool, (9,))
