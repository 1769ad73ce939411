#include "xrank/sturm.hpp"

#include <algorithm>

namespace xrank {

namespace qpoly {

QPoly trim(QPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

int degree(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

bool is_zero(const QPoly& p) { return p.empty(); }

Rational eval(const QPoly& p, const Rational& x) {
    Rational acc = 0;
    for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

QPoly derivative(const QPoly& p) {
    if (p.size() <= 1) return {};
    QPoly d(p.size() - 1);
    for (size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * Rational(static_cast<long>(i));
    return trim(std::move(d));
}

QPoly multiply(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly out(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return trim(std::move(out));
}

QPoly scale(QPoly p, const Rational& c) {
    for (auto& v : p) v *= c;
    return trim(std::move(p));
}

QPoly add(const QPoly& a, const QPoly& b) {
    QPoly out(std::max(a.size(), b.size()), Rational(0));
    for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return trim(std::move(out));
}

QPoly primitive_part(const QPoly& p) {
    if (p.empty()) return {};
    BigInt den_lcm = 1;
    for (const auto& c : p) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    BigInt num_gcd = 0;
    std::vector<BigInt> ints;
    ints.reserve(p.size());
    for (const auto& c : p) {
        Rational scaled = c * Rational(den_lcm);
        ints.push_back(scaled.get_num());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), ints.back().get_mpz_t());
    }
    if (num_gcd == 0) return {};
    QPoly out(p.size());
    for (size_t i = 0; i < p.size(); ++i) out[i] = Rational(ints[i] / num_gcd);
    return trim(std::move(out));
}

std::pair<QPoly, QPoly> divmod(const QPoly& num, const QPoly& den) {
    if (den.empty()) throw InputError("qpoly::divmod: division by zero polynomial");
    QPoly rem = num;
    const int dd = degree(den);
    if (degree(num) < dd) return {{}, trim(std::move(rem))};
    QPoly quot(static_cast<size_t>(degree(num) - dd + 1), Rational(0));
    const Rational lead_inv = 1 / den.back();
    for (int k = degree(num) - dd; k >= 0; --k) {
        const Rational c = rem[static_cast<size_t>(k + dd)] * lead_inv;
        quot[static_cast<size_t>(k)] = c;
        if (c == 0) continue;
        for (int j = 0; j <= dd; ++j)
            rem[static_cast<size_t>(k + j)] -= c * den[static_cast<size_t>(j)];
    }
    rem.resize(static_cast<size_t>(std::max(dd, 0)));
    return {trim(std::move(quot)), trim(std::move(rem))};
}

QPoly gcd(const QPoly& a, const QPoly& b) {
    QPoly x = primitive_part(a), y = primitive_part(b);
    while (!y.empty()) {
        QPoly r = divmod(x, y).second;
        x = std::move(y);
        y = primitive_part(r);
    }
    if (x.empty()) return {};
    const Rational lead_inv = 1 / x.back();
    return scale(std::move(x), lead_inv);
}

bool square_free(const QPoly& p) {
    if (degree(p) <= 1) return !p.empty();
    return degree(gcd(p, derivative(p))) == 0;
}

QPoly deflate(const QPoly& p, const Rational& root) {
    QPoly lin{-root, Rational(1)};
    auto [q, r] = divmod(p, lin);
    if (!r.empty()) throw InputError("qpoly::deflate: not a root");
    return q;
}

}  // namespace qpoly

std::vector<QPoly> sturm_chain(const QPoly& p) {
    std::vector<QPoly> chain;
    QPoly p0 = qpoly::primitive_part(p);
    if (p0.empty()) return chain;
    chain.push_back(p0);
    QPoly p1 = qpoly::primitive_part(qpoly::derivative(p0));
    if (p1.empty()) return chain;
    chain.push_back(p1);
    while (true) {
        const QPoly& a = chain[chain.size() - 2];
        const QPoly& b = chain[chain.size() - 1];
        QPoly r = qpoly::divmod(a, b).second;
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        chain.push_back(qpoly::primitive_part(r));
    }
    return chain;
}

namespace {

int sign_of(const Rational& q) { return q == 0 ? 0 : (q > 0 ? 1 : -1); }

int variations(const std::vector<int>& signs) {
    int count = 0;
    int prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

int variations_at(const std::vector<QPoly>& chain, const Rational& x) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& p : chain) signs.push_back(sign_of(qpoly::eval(p, x)));
    return variations(signs);
}

// sign at +inf is the leading sign; at -inf it flips with odd degree
int variations_at_infinity(const std::vector<QPoly>& chain, bool positive) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& p : chain) {
        int s = sign_of(p.back());
        if (!positive && qpoly::degree(p) % 2 == 1) s = -s;
        signs.push_back(s);
    }
    return variations(signs);
}

}  // namespace

int count_real_roots(const QPoly& p) {
    if (qpoly::degree(p) <= 0) return 0;
    const auto chain = sturm_chain(p);
    return variations_at_infinity(chain, false) - variations_at_infinity(chain, true);
}

int count_real_roots_in(const QPoly& p, const Rational& a, const Rational& b) {
    if (qpoly::degree(p) <= 0) return 0;
    const auto chain = sturm_chain(p);
    return variations_at(chain, a) - variations_at(chain, b);
}

Rational root_bound(const QPoly& p) {
    if (qpoly::degree(p) < 1) return 1;
    Rational bound = 0;
    const Rational lead = p.back();
    for (size_t i = 0; i + 1 < p.size(); ++i) {
        Rational q = abs(p[i] / lead);
        bound = std::max(bound, q);
    }
    return bound + 1;
}

std::vector<std::pair<Rational, Rational>> isolate_real_roots(const QPoly& p) {
    std::vector<std::pair<Rational, Rational>> out;
    if (qpoly::degree(p) < 1) return out;
    const auto chain = sturm_chain(p);
    const Rational bound = root_bound(p);

    auto count_in = [&](const Rational& a, const Rational& b) {
        return variations_at(chain, a) - variations_at(chain, b);
    };

    std::vector<std::pair<Rational, Rational>> stack{{-bound, bound}};
    while (!stack.empty()) {
        auto [lo, hi] = stack.back();
        stack.pop_back();
        const int c = count_in(lo, hi);
        if (c == 0) continue;
        if (c == 1) {
            out.emplace_back(lo, hi);
            continue;
        }
        const Rational mid = (lo + hi) / 2;
        stack.emplace_back(lo, mid);
        stack.emplace_back(mid, hi);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

std::pair<Rational, Rational> refine_root(const QPoly& p, std::pair<Rational, Rational> iv,
                                          const Rational& width) {
    const auto chain = sturm_chain(p);
    auto count_in = [&](const Rational& a, const Rational& b) {
        return variations_at(chain, a) - variations_at(chain, b);
    };
    while (iv.second - iv.first > width) {
        const Rational mid = (iv.first + iv.second) / 2;
        if (count_in(iv.first, mid) >= 1)
            iv.second = mid;
        else
            iv.first = mid;
    }
    return iv;
}

}  // namespace xrank
