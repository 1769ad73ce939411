#include "xrank/polyroots.hpp"

#include <cmath>
#include <stdexcept>

namespace xrank {

std::vector<std::complex<double>> poly_roots(const std::vector<std::complex<double>>& ascending,
                                             int max_iter, double tol) {
    using C = std::complex<double>;
    std::vector<C> p = ascending;
    while (!p.empty() && std::abs(p.back()) == 0.0) p.pop_back();
    const int deg = static_cast<int>(p.size()) - 1;
    if (deg < 1) return {};

    // monic
    const C lead = p.back();
    for (auto& c : p) c /= lead;

    double radius = 0.0;
    for (int i = 0; i < deg; ++i) radius = std::max(radius, std::abs(p[static_cast<size_t>(i)]));
    radius = 1.0 + radius;

    std::vector<C> w(static_cast<size_t>(deg));
    for (int k = 0; k < deg; ++k) {
        const double angle = 6.283185307179586 * k / deg + 0.4;
        w[static_cast<size_t>(k)] = radius * C(std::cos(angle), std::sin(angle));
    }

    auto eval = [&](C z) {
        C acc = 1.0;  // monic leading term folded in
        for (int i = deg - 1; i >= 0; --i) acc = acc * z + p[static_cast<size_t>(i)];
        return acc;
    };

    for (int iter = 0; iter < max_iter; ++iter) {
        double max_step = 0.0;
        for (int k = 0; k < deg; ++k) {
            C denom = 1.0;
            for (int j = 0; j < deg; ++j) {
                if (j == k) continue;
                denom *= w[static_cast<size_t>(k)] - w[static_cast<size_t>(j)];
            }
            if (std::abs(denom) == 0.0) {
                w[static_cast<size_t>(k)] += C(1e-8, 1e-8);
                continue;
            }
            const C step = eval(w[static_cast<size_t>(k)]) / denom;
            w[static_cast<size_t>(k)] -= step;
            max_step = std::max(max_step, std::abs(step));
        }
        if (max_step < tol * (1.0 + radius)) break;
    }
    return w;
}

std::vector<std::complex<double>> poly_roots(const QPoly& p) {
    std::vector<std::complex<double>> c;
    c.reserve(p.size());
    for (const auto& q : p) c.emplace_back(to_double(q), 0.0);
    return poly_roots(c);
}

MpComplex polish_root(const QPoly& p, std::complex<double> approx, unsigned prec) {
    const QPoly dp = qpoly::derivative(p);
    std::vector<MpComplex> pc, dpc;
    pc.reserve(p.size());
    dpc.reserve(dp.size());
    for (const auto& q : p) pc.emplace_back(mpf_class(q.get_num(), prec) / mpf_class(q.get_den(), prec),
                                            mpf_class(0, prec));
    for (const auto& q : dp)
        dpc.emplace_back(mpf_class(q.get_num(), prec) / mpf_class(q.get_den(), prec),
                         mpf_class(0, prec));

    auto eval = [](const std::vector<MpComplex>& poly, const MpComplex& z) {
        MpComplex acc;
        for (size_t i = poly.size(); i-- > 0;) acc = acc * z + poly[i];
        return acc;
    };

    MpComplex z(approx, prec);
    for (int iter = 0; iter < 64; ++iter) {
        const MpComplex fz = eval(pc, z);
        const MpComplex dz = eval(dpc, z);
        if (dz.abs2() == 0) break;
        const MpComplex step = fz / dz;
        z = z - step;
        mpf_class tol(1, prec);
        tol >>= (prec - 8);  // stop near the working precision
        if (step.abs2() < tol * tol * (1 + z.abs2())) break;
    }
    return z;
}

std::vector<MpComplex> solve_mp(std::vector<std::vector<MpComplex>> a, std::vector<MpComplex> rhs) {
    const size_t n = a.size();
    if (n == 0 || a[0].size() != n || rhs.size() != n)
        throw std::invalid_argument("solve_mp: square systems only");
    for (size_t k = 0; k < n; ++k) {
        size_t pivot = k;
        mpf_class best = a[k][k].abs2();
        for (size_t i = k + 1; i < n; ++i) {
            const mpf_class v = a[i][k].abs2();
            if (v > best) {
                best = v;
                pivot = i;
            }
        }
        if (best == 0) throw std::invalid_argument("solve_mp: singular system");
        std::swap(a[k], a[pivot]);
        std::swap(rhs[k], rhs[pivot]);
        for (size_t i = k + 1; i < n; ++i) {
            const MpComplex f = a[i][k] / a[k][k];
            for (size_t j = k; j < n; ++j) a[i][j] = a[i][j] - f * a[k][j];
            rhs[i] = rhs[i] - f * rhs[k];
        }
    }
    std::vector<MpComplex> x(n);
    for (size_t i = n; i-- > 0;) {
        MpComplex acc = rhs[i];
        for (size_t j = i + 1; j < n; ++j) acc = acc - a[i][j] * x[j];
        x[i] = acc / a[i][i];
    }
    return x;
}

}  // namespace xrank
