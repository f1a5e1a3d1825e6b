import io
from fractions import Fraction

import pytest

from poscodeg.flags import basis_family, generate_flags, pos_codegree_constraint
from poscodeg.sdp import (
    Certificate,
    CertificateError,
    SDPProblem,
    assemble_problem,
    edge_density_vector,
    host_check,
    ldl_psd_check,
    parse_sdpa,
    read_certificate,
    register_certificate_reader,
    sdpa_data,
    standard_types,
    verify_certificate,
    write_sdpa,
)

from conftest import random_graph

F = Fraction


def toy_problem():
    basis = basis_family(3)  # the empty triple and the edge
    return SDPProblem(basis, (F(1), F(0)), [], [(F(1), F(-1))])


def small_problem():
    basis = basis_family(4)
    types = standard_types(4, None)
    obj = tuple(-x for x in edge_density_vector(basis))
    return assemble_problem(basis, obj, types, [pos_codegree_constraint(1, 2, 4, basis)], "small")


def test_toy_export_shape():
    P = SDPProblem(basis_family(3), (F(1, 2), F(1, 3)))
    D = sdpa_data(P)
    assert D.n_vars == 1 and D.block_struct == [-2]
    text = io.StringIO()
    write_sdpa(P, text)
    assert "* scale 6" in text.getvalue()
    assert parse_sdpa(text.getvalue()).entries == D.entries


def test_decimal_rendering_without_scale():
    P = small_problem()
    buf = io.StringIO()
    data = write_sdpa(P, buf)
    again = parse_sdpa(buf.getvalue())
    assert again.entries == sdpa_data(P).entries and again.c == data.c
    assert again.block_struct[: len(P.blocks)] == P.block_dims


def test_block_dims_match_flag_counts():
    P = small_problem()
    for b in P.blocks:
        assert b.dim == len(generate_flags(b.type, (4 + b.type.s) // 2))


def test_ldl():
    assert ldl_psd_check([[F(2), F(1)], [F(1), F(2)]]).ok
    assert ldl_psd_check([[F(0), F(0)], [F(0), F(1)]]).ok
    bad = ldl_psd_check([[F(1), F(2)], [F(2), F(1)]])
    assert not bad.ok and "negative pivot" in bad.reason
    z = ldl_psd_check([[F(0), F(1)], [F(1), F(0)]])
    assert not z.ok and z.index is not None
    assert ldl_psd_check([]).ok


def test_trivial_and_toy_certificates():
    P = SDPProblem(basis_family(3), (F(2), F(2)))
    v = verify_certificate(P, Certificate.trivial(P, F(2)))
    assert v.accepted and set(v.slacks) == {0}
    T = toy_problem()
    v = verify_certificate(T, Certificate(F(0), [], [F(1)]))
    assert v.accepted and v.slacks == (F(0), F(1))
    assert v.argmin == 0


def test_rejections_name_locations():
    P = small_problem()
    cert = Certificate.trivial(P, F(-1))
    assert verify_certificate(P, cert).accepted
    cert.blocks[1][0][0] = F(-1)
    v = verify_certificate(P, cert)
    assert not v.accepted and any(f.startswith("block 1:") for f in v.failures)
    cert = Certificate.trivial(P, F(-1))
    cert.multipliers[0] = F(-1, 2)
    assert "multiplier 0: negative value -1/2" in verify_certificate(P, cert).failures
    cert = Certificate.trivial(P, F(0))
    v = verify_certificate(P, cert)
    assert not v.accepted and any(f.startswith(f"basis member {v.argmin}:") for f in v.failures)


def test_shape_and_symmetry_errors():
    P = small_problem()
    with pytest.raises(ValueError):
        verify_certificate(P, Certificate(F(0), [], []))
    cert = Certificate.trivial(P)
    cert.blocks[1][0][1] = F(1)
    with pytest.raises(CertificateError):
        verify_certificate(P, cert)


def test_certificate_json_and_readers():
    c = Certificate(F(1, 3), [], [F(2, 7)])
    assert read_certificate(c.dumps()) == c
    with pytest.raises(CertificateError):
        read_certificate("{}")
    with pytest.raises(CertificateError):
        read_certificate("", "companion")
    register_certificate_reader("same", lambda text: c)
    assert read_certificate("ignored", "same") is c


def test_host_check_is_sound(rng):
    P = small_problem()
    # a positive semidefinite block and a multiplier; bound from the verifier
    cert = Certificate.trivial(P)
    b = P.blocks[1]
    cert.blocks[1] = [[F(1) if i == j else F(0) for j in range(b.dim)] for i in range(b.dim)]
    cert.multipliers = [F(1, 3)]
    v = verify_certificate(P, cert)
    cert.bound = v.min_slack
    assert verify_certificate(P, cert).accepted
    for _ in range(10):
        hc = host_check(P, cert, random_graph(rng, 7))
        assert hc.holds
