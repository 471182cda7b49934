# -*- coding: utf-8 -*-
"""ArchimedeanService - 완비 리만 ξ, 가우스 함수의 푸리에/Mellin/Poisson 검사"""

import logging
import math
from typing import Any, Dict, Sequence

import mpmath
import numpy as np

import config
from ..entities.quadratic_field_data import CompletedZetaTerm
from ..exceptions import InvalidArgument, PoleError

logger = logging.getLogger(__name__)


def incomplete_mellin(a, x) -> complex:
    """E(a, x) = ∫_1^∞ t^a e^{-xt} dt/t = x^{-a}·Γ(a, x)"""
    return mpmath.power(x, -a) * mpmath.gammainc(a, x)


class ArchimedeanService:
    """실 자리의 해석적 검사 (배정밀도 결과, 계산은 mpmath)"""

    @staticmethod
    def riemann_xi(s, N_trunc: int = None) -> complex:
        """
        ξ(s) = -1/s + 1/(s-1) + Σ_{n≤N} [E(s/2, πn²) + E((1-s)/2, πn²)]

        Raises:
            PoleError: s ∈ {0, 1}
            InvalidArgument: N_trunc < 1

        Examples:
            >>> abs(ArchimedeanService.riemann_xi(2) - math.pi / 6) < 1e-9
            True
        """
        N = N_trunc or config.NUMBER_FIELD_DEFAULTS['riemann_trunc']
        if N < 1:
            raise InvalidArgument(f"truncation must be >= 1, got {N}")
        if s == 0 or s == 1:
            raise PoleError(f"xi has a pole at s = {s}")
        with mpmath.workdps(30):
            s = mpmath.mpmathify(s)
            total = -1 / s + 1 / (s - 1)
            for n in range(1, N + 1):
                x = mpmath.pi * n * n
                total += incomplete_mellin(s / 2, x) + incomplete_mellin((1 - s) / 2, x)
            return complex(total)

    @staticmethod
    def riemann_xi_checks(samples: Sequence = None, N_trunc: int = None) -> Dict[str, Any]:
        """
        ξ(2) = π/6 고정점 검사와 표본 위 ξ(s) = ξ(1-s) 검사

        표본마다 감마 인자 G₁(s)·ζ(s) 와의 교차 검증도 기록합니다 (극이 아닌 경우).
        """
        samples = samples or config.NUMBER_FIELD_DEFAULTS['riemann_samples']
        N = N_trunc or config.NUMBER_FIELD_DEFAULTS['riemann_trunc']
        gamma_term = CompletedZetaTerm("real", N)
        tolerance = config.TOLERANCES['riemann_xi']

        anchor = ArchimedeanService.riemann_xi(2, N)
        anchor_error = abs(anchor - math.pi / 6)
        entries = []
        for s in samples:
            value = ArchimedeanService.riemann_xi(s, N)
            mirror = ArchimedeanService.riemann_xi(1 - s, N)
            closed = gamma_term.factor(s) * complex(mpmath.zeta(s))
            entries.append({
                "s": complex(s),
                "xi": value,
                "xi_mirror": mirror,
                "abs_diff": abs(value - mirror),
                "closed_form": closed,
                "closed_form_diff": abs(value - closed),
                "ok": abs(value - mirror) < tolerance and abs(value - closed) < tolerance * max(1.0, abs(closed)),
            })
        return {
            "truncation": gamma_term.to_dict(),
            "anchor": {"s": 2, "xi": anchor, "expected": math.pi / 6, "abs_err": anchor_error,
                       "ok": anchor_error < config.TOLERANCES['riemann_xi_anchor']},
            "samples": entries,
            "ok": anchor_error < config.TOLERANCES['riemann_xi_anchor'] and all(e["ok"] for e in entries),
        }

    @staticmethod
    def gaussian_checks(a=None, n: int = None, s=None) -> Dict[str, Any]:
        """
        가우스 함수 검사

        (i) e^{-πax²} 의 수치 푸리에 변환 = a^{-1/2}·e^{-πξ²/a} ([-5, 5] sup 오차)
        (ii) ∫₀^∞ x^{s+2n} e^{-ax²} dx/x = ½·a^{-n-s/2}·Γ(s/2 + n) (상대 오차)
        (iii) Σ_{|k|≤N} e^{-πk²t} = t^{-1/2}·Σ_{|k|≤N} e^{-πk²/t}

        Raises:
            InvalidArgument: a ≤ 0, n < 0, Re(s) + 2n ≤ 0
        """
        defaults = config.NUMBER_FIELD_DEFAULTS
        a = defaults['gaussian_a'] if a is None else a
        n = defaults['gaussian_n'] if n is None else n
        s = defaults['gaussian_s'] if s is None else s
        if a <= 0:
            raise InvalidArgument(f"a must be positive, got {a}")
        if n < 0:
            raise InvalidArgument(f"n must be non-negative, got {n}")
        if complex(s).real + 2 * n <= 0:
            raise InvalidArgument(f"Mellin integral diverges for Re(s) + 2n = {complex(s).real + 2 * n}")
        a = float(a)

        # (i) 사다리꼴 푸리에 변환
        half_width = defaults['gaussian_grid_half_width']
        x = np.linspace(-half_width, half_width, 4801)
        dx = x[1] - x[0]
        xi = np.linspace(-5.0, 5.0, 201)
        f = np.exp(-np.pi * a * x * x)
        numeric = (f[None, :] * np.cos(2 * np.pi * np.outer(xi, x))).sum(axis=1) * dx
        expected = np.exp(-np.pi * xi * xi / a) / math.sqrt(a)
        fourier_error = float(np.max(np.abs(numeric - expected)))

        # (ii) Mellin 구적
        with mpmath.workdps(30):
            s_mp = mpmath.mpmathify(s)
            quadrature = mpmath.quad(lambda t: t ** (s_mp + 2 * n - 1) * mpmath.exp(-a * t * t), [0, 1, mpmath.inf])
            closed = mpmath.mpf(1) / 2 * mpmath.power(a, -n - s_mp / 2) * mpmath.gamma(s_mp / 2 + n)
            mellin_error = float(abs(quadrature - closed) / abs(closed))

        # (iii) Poisson
        terms = defaults['gaussian_poisson_terms']
        k = np.arange(-terms, terms + 1, dtype=np.float64)
        poisson = []
        for t in defaults['gaussian_poisson_t']:
            lhs = float(np.sum(np.exp(-np.pi * k * k * t)))
            rhs = float(np.sum(np.exp(-np.pi * k * k / t))) / math.sqrt(t)
            poisson.append({"t": t, "lhs": lhs, "rhs": rhs, "abs_err": abs(lhs - rhs),
                            "ok": abs(lhs - rhs) < config.TOLERANCES['gaussian_poisson']})

        tolerance = config.TOLERANCES['gaussian']
        return {
            "a": a,
            "n": n,
            "s": complex(s),
            "fourier": {"sup_err": fourier_error, "ok": fourier_error < tolerance},
            "mellin": {"numeric": complex(quadrature), "closed_form": complex(closed),
                       "factor": "1/2", "rel_err": mellin_error, "ok": mellin_error < tolerance},
            "poisson": poisson,
            "ok": fourier_error < tolerance and mellin_error < tolerance and all(p["ok"] for p in poisson),
        }
