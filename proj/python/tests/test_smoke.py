import math
import os
import subprocess

import numpy as np
import pytest

import se3conv


def random_rotation(rng):
    q = rng.normal(size=4)
    q /= np.linalg.norm(q)
    w, x, y, z = q
    return np.array([
        [1 - 2 * (y * y + z * z), 2 * (x * y - z * w), 2 * (x * z + y * w)],
        [2 * (x * y + z * w), 1 - 2 * (x * x + z * z), 2 * (y * z - x * w)],
        [2 * (x * z - y * w), 2 * (y * z + x * w), 1 - 2 * (x * x + y * y)],
    ])


def test_constant_harmonic():
    y = se3conv.real_spherical_harmonics(0, [0.0, 0.0, 1.0])
    assert y.shape == (1,)
    assert y[0] == pytest.approx(0.5 / math.sqrt(math.pi), abs=1e-16)


def test_steerability():
    rng = np.random.default_rng(0)
    for l in range(4):
        r = random_rotation(rng)
        x = rng.normal(size=3)
        lhs = se3conv.real_spherical_harmonics(l, r @ x)
        rhs = se3conv.wigner_D_real(l, r) @ se3conv.real_spherical_harmonics(l, x)
        assert np.max(np.abs(lhs - rhs)) < 1e-12


def test_cg_values_and_errors():
    assert se3conv.cg_scalar(1, 1, 0, 1, -1, 0) == pytest.approx(0.5773502691896257, abs=1e-15)
    q = se3conv.cg_tensor_real(2, 1, 2)
    assert q.shape == (15, 5)
    assert np.allclose(q.T @ q, np.eye(5), atol=1e-12)
    with pytest.raises(se3conv.TriangleViolation):
        se3conv.cg_tensor_real(1, 1, 3)
    with pytest.raises(se3conv.Se3convError):
        se3conv.wigner_D_real(1, np.diag([1.0, 1.0, -1.0]))


def test_sampling():
    rots, weights = se3conv.icosahedral_group()
    assert len(rots) == 60
    assert sum(weights) == pytest.approx(1.0)
    rots, weights = se3conv.exact_euler_grid(3)
    assert len(rots) == 108
    a, _ = se3conv.fps_rotations(8, 1)
    b, _ = se3conv.fps_rotations(8, 1)
    assert all(np.array_equal(x, y) for x, y in zip(a, b))


def test_zernike():
    assert list(se3conv.zernike_radial_coeffs(2, 0)) == pytest.approx([-2.2912878474779204, 3.8188130791298667])


def test_verify_suite():
    results = se3conv.verify("clebsch")
    assert results
    assert all(r["pass"] for r in results)
    with pytest.raises(ValueError):
        se3conv.verify("missing")


def test_cli_binding():
    code, out, _ = se3conv.cli(["eval-basis", "--sh", "0", "0", "0", "1"])
    assert code == 0
    assert out == "0.28209479177387814\n"


@pytest.mark.skipif("SE3CONV_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_executable():
    out = subprocess.run([os.environ["SE3CONV_CLI"], "sample-rotations", "--kind", "ico"],
                         capture_output=True, text=True, check=True).stdout
    assert len(out.splitlines()) == 60
