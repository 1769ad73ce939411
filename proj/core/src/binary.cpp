#include "xrank/binary.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "xrank/combinatorics.hpp"
#include "xrank/polyroots.hpp"
#include "xrank/rng.hpp"
#include "xrank/sturm.hpp"

namespace xrank {

BinaryForm::BinaryForm(int degree, std::vector<Rational> c) : d(degree), coeffs(std::move(c)) {
    if (d < 0 || coeffs.size() != static_cast<size_t>(d) + 1)
        throw InputError("BinaryForm: coefficient count must be degree + 1");
}

bool BinaryForm::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return c == 0; });
}

BinaryForm BinaryForm::monomial(int degree, int y_exponent, Rational c) {
    if (y_exponent < 0 || y_exponent > degree) throw InputError("BinaryForm::monomial: bad exponent");
    std::vector<Rational> coeffs(static_cast<size_t>(degree) + 1, Rational(0));
    coeffs[static_cast<size_t>(y_exponent)] = std::move(c);
    return BinaryForm(degree, std::move(coeffs));
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

// sparse bivariate polynomial keyed by (x-exponent, y-exponent)
using BiPoly = std::map<std::pair<int, int>, Rational>;

BiPoly bp_const(const Rational& c) {
    BiPoly p;
    if (c != 0) p[{0, 0}] = c;
    return p;
}

BiPoly bp_add(const BiPoly& a, const BiPoly& b, int sign_b) {
    BiPoly out = a;
    for (const auto& [key, val] : b) {
        out[key] += sign_b * val;
        if (out[key] == 0) out.erase(key);
    }
    return out;
}

BiPoly bp_mul(const BiPoly& a, const BiPoly& b) {
    BiPoly out;
    for (const auto& [ka, va] : a)
        for (const auto& [kb, vb] : b) {
            const std::pair<int, int> key{ka.first + kb.first, ka.second + kb.second};
            out[key] += va * vb;
            if (out[key] == 0) out.erase(key);
        }
    return out;
}

BiPoly bp_pow(const BiPoly& base, int e) {
    BiPoly acc = bp_const(1);
    for (int i = 0; i < e; ++i) acc = bp_mul(acc, base);
    return acc;
}

class FormParser {
public:
    explicit FormParser(const std::string& text) : s_(text) {}

    BiPoly parse() {
        BiPoly p = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    BiPoly expr() {
        skip_ws();
        int sign = 1;
        if (peek() == '-') {
            sign = -1;
            ++pos_;
        } else if (peek() == '+') {
            ++pos_;
        }
        BiPoly acc = bp_add(bp_const(0), term(), sign);
        while (true) {
            skip_ws();
            const char c = peek();
            if (c == '+' || c == '-') {
                ++pos_;
                acc = bp_add(acc, term(), c == '+' ? 1 : -1);
            } else {
                return acc;
            }
        }
    }

    BiPoly term() {
        BiPoly acc = factor();
        while (true) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                acc = bp_mul(acc, factor());
            } else {
                return acc;
            }
        }
    }

    BiPoly factor() {
        BiPoly base = primary();
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            const int e = integer();
            if (e < 0) fail("exponent must be nonnegative");
            return bp_pow(base, e);
        }
        return base;
    }

    BiPoly primary() {
        skip_ws();
        const char c = peek();
        if (c == 'x') {
            ++pos_;
            BiPoly p;
            p[{1, 0}] = 1;
            return p;
        }
        if (c == 'y') {
            ++pos_;
            BiPoly p;
            p[{0, 1}] = 1;
            return p;
        }
        if (c == '(') {
            ++pos_;
            BiPoly p = expr();
            skip_ws();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return bp_const(integer());
        fail("expected a number, x, y or '('");
        return {};
    }

    int integer() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        return std::stoi(s_.substr(start, pos_ - start));
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw InputError("parse_binary_form: " + msg + " at position " + std::to_string(pos_));
    }

    const std::string& s_;
    size_t pos_ = 0;
};

}  // namespace

BinaryForm parse_binary_form(const std::string& text) {
    const BiPoly p = FormParser(text).parse();
    if (p.empty()) throw InputError("parse_binary_form: the zero form has no degree");
    int total = -1;
    for (const auto& [key, val] : p) {
        const int deg = key.first + key.second;
        if (total == -1) total = deg;
        if (deg != total) throw InputError("parse_binary_form: expression is not homogeneous");
    }
    std::vector<Rational> coeffs(static_cast<size_t>(total) + 1, Rational(0));
    for (const auto& [key, val] : p) coeffs[static_cast<size_t>(key.second)] = val;
    return BinaryForm(total, std::move(coeffs));
}

std::string to_string(const BinaryForm& f) {
    std::ostringstream os;
    bool first = true;
    for (int j = 0; j <= f.d; ++j) {
        const Rational& c = f.coeffs[static_cast<size_t>(j)];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        if (first && c < 0) os << "-";
        first = false;
        const Rational a = abs(c);
        const int xe = f.d - j, ye = j;
        const bool show_coeff = a != 1 || (xe == 0 && ye == 0);
        if (show_coeff) os << a.get_str();
        if (xe > 0) {
            if (show_coeff) os << "*";
            os << "x";
            if (xe > 1) os << "^" << xe;
        }
        if (ye > 0) {
            if (show_coeff || xe > 0) os << "*";
            os << "y";
            if (ye > 1) os << "^" << ye;
        }
    }
    if (first) os << "0";
    return os.str();
}

// ---------------------------------------------------------------------------
// Catalecticant and kernel search
// ---------------------------------------------------------------------------

RationalMatrix catalecticant(const BinaryForm& f, int r) {
    if (r < 0 || r > f.d) throw InputError("catalecticant: need 0 <= r <= d");
    std::vector<Rational> a(static_cast<size_t>(f.d) + 1);
    for (int i = 0; i <= f.d; ++i)
        a[static_cast<size_t>(i)] = f.coeffs[static_cast<size_t>(i)] / Rational(binom(f.d, i));
    RationalMatrix m(static_cast<size_t>(f.d - r + 1), static_cast<size_t>(r + 1));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = a[i + j];
    return m;
}

namespace {

// kernel vector (g_0..g_r) <-> G = sum g_j x^{r-j} y^j; as a univariate in
// t = y/x this is just the ascending-coefficient polynomial
QPoly to_qpoly(const std::vector<Rational>& v) { return qpoly::trim(v); }

// square-free as a *binary* form: square-free finite part and at most a
// simple root at infinity
bool form_square_free(const QPoly& g, int r) {
    if (g.empty()) return false;
    const int m = qpoly::degree(g);
    if (r - m > 1) return false;
    return qpoly::square_free(g);
}

// r distinct real projective roots: square-free, all finite roots real
bool form_real_rooted(const QPoly& g, int r) {
    if (!form_square_free(g, r)) return false;
    const int m = qpoly::degree(g);
    if (m == 0) return true;  // only the root at infinity
    return count_real_roots(g) == m;
}

// cheap numeric screen before the exact Sturm certificate
bool plausibly_real_rooted(const QPoly& g, int r) {
    const int m = qpoly::degree(g);
    if (m < 0 || r - m > 1) return false;
    if (m == 0) return true;
    const auto roots = poly_roots(g);
    double scale = 1.0;
    for (const auto& z : roots) scale = std::max(scale, std::abs(z));
    for (const auto& z : roots)
        if (std::abs(z.imag()) > 1e-5 * (1.0 + std::abs(z.real()))) return false;
    for (size_t i = 0; i < roots.size(); ++i)
        for (size_t j = i + 1; j < roots.size(); ++j)
            if (std::abs(roots[i] - roots[j]) < 1e-9 * scale) return false;
    return true;
}

std::vector<Rational> column(const RationalMatrix& m, std::size_t j) {
    std::vector<Rational> v(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) v[i] = m(i, j);
    return v;
}

std::vector<Rational> combine(const RationalMatrix& basis, const std::vector<int>& weights) {
    std::vector<Rational> v(basis.rows(), Rational(0));
    for (std::size_t j = 0; j < basis.cols(); ++j) {
        if (weights[j] == 0) continue;
        for (std::size_t i = 0; i < basis.rows(); ++i) v[i] += weights[j] * basis(i, j);
    }
    return v;
}

// Search the kernel span for an element passing `accept`. Deterministic
// probes first (basis vectors, pair sums/differences), then seeded random
// integer combinations over a widening box. A passing element exists on an
// open dense subset of the kernel at the true rank, so the random phase
// misses only with vanishing probability.
template <typename Accept>
std::optional<QPoly> search_kernel(const RationalMatrix& basis, Accept&& accept) {
    const std::size_t k = basis.cols();
    if (k == 0) return std::nullopt;

    for (std::size_t j = 0; j < k; ++j) {
        QPoly g = to_qpoly(column(basis, j));
        if (accept(g)) return g;
    }
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            for (int sign : {1, -1}) {
                std::vector<int> w(k, 0);
                w[i] = 1;
                w[j] = sign;
                QPoly g = to_qpoly(combine(basis, w));
                if (accept(g)) return g;
            }
        }
    }

    Rng rng(0x5e4ccafeULL + k);
    int box = 3;
    for (int attempt = 0; attempt < 384; ++attempt) {
        if (attempt > 0 && attempt % 96 == 0) box *= 4;
        std::vector<int> w(k, 0);
        bool nonzero = false;
        for (auto& x : w) {
            x = rng.uniform_int(-box, box);
            nonzero = nonzero || x != 0;
        }
        if (!nonzero) continue;
        QPoly g = to_qpoly(combine(basis, w));
        if (accept(g)) return g;
    }
    return std::nullopt;
}

}  // namespace

RankCertificate complex_rank(const BinaryForm& f) {
    if (f.is_zero()) throw InputError("complex_rank: zero form");
    for (int r = 1; r <= f.d; ++r) {
        const RationalMatrix ker = nullspace(catalecticant(f, r));
        if (ker.cols() == 0) continue;
        auto g = search_kernel(ker, [&](const QPoly& cand) { return form_square_free(cand, r); });
        if (!g) continue;
        std::vector<Rational> coeffs(static_cast<size_t>(r) + 1, Rational(0));
        for (size_t j = 0; j < g->size(); ++j) coeffs[j] = (*g)[j];
        return {r, BinaryForm(r, std::move(coeffs)), Field::Complex};
    }
    throw InputError("complex_rank: no certificate up to degree d (cannot happen for nonzero input)");
}

namespace {

bool real_accept(const QPoly& g, int r) {
    return plausibly_real_rooted(g, r) && form_real_rooted(g, r);
}

// all-double screen used on the bulk search paths; exact certification
// follows on anything that looks real-rooted
bool screen_real_rooted(const std::vector<double>& g, int r) {
    double max_c = 0.0;
    for (double c : g) max_c = std::max(max_c, std::abs(c));
    if (max_c == 0.0) return false;
    int m = -1;
    for (size_t i = 0; i < g.size(); ++i)
        if (std::abs(g[i]) > 1e-12 * max_c) m = static_cast<int>(i);
    if (m < 0 || r - m > 1) return false;
    if (m == 0) return true;
    std::vector<std::complex<double>> coeffs(g.begin(), g.begin() + m + 1);
    const auto roots = poly_roots(coeffs, 90, 1e-9);
    double scale = 1.0;
    for (const auto& z : roots) scale = std::max(scale, std::abs(z));
    for (const auto& z : roots)
        if (std::abs(z.imag()) > 1e-4 * (1.0 + std::abs(z.real()))) return false;
    for (size_t i = 0; i < roots.size(); ++i)
        for (size_t j = i + 1; j < roots.size(); ++j)
            if (std::abs(roots[i] - roots[j]) < 1e-8 * scale) return false;
    return true;
}

// The real-rooted subset of a kernel can be thin in coefficient space, so
// the search works in root space instead:
//   dim 1: check the single element;
//   dim 2: walk a projective-line grid over the pencil;
//   dim k >= 3: prescribe k-1 random roots as linear conditions, leaving a
//     cofactor of degree r-k+1 to check. At r = d the kernel is a
//     hyperplane (k = r), the cofactor is linear, and every draw with
//     distinct prescribed roots succeeds.
// All bulk scanning runs in doubles; candidates that pass the screen are
// rebuilt exactly and certified by Sturm counts.
std::optional<QPoly> find_real_rooted(const RationalMatrix& ker, int r) {
    const std::size_t k = ker.cols();
    if (k == 0) return std::nullopt;

    std::vector<QPoly> cols(k);
    std::vector<std::vector<double>> dcols(k);
    for (std::size_t j = 0; j < k; ++j) {
        cols[j] = to_qpoly(column(ker, j));
        dcols[j].resize(ker.rows());
        for (std::size_t i = 0; i < ker.rows(); ++i) dcols[j][i] = to_double(ker(i, j));
    }

    for (std::size_t j = 0; j < k; ++j)
        if (real_accept(cols[j], r)) return cols[j];
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            for (int sign : {1, -1}) {
                std::vector<int> w(k, 0);
                w[i] = 1;
                w[j] = sign;
                QPoly g = to_qpoly(combine(ker, w));
                if (real_accept(g, r)) return g;
            }
        }
    }
    if (k == 1) return std::nullopt;

    if (k == 2) {
        auto exact_blend = [&](const Rational& lam, bool first_chart) {
            std::vector<Rational> g(ker.rows(), Rational(0));
            for (size_t i = 0; i < ker.rows(); ++i)
                g[i] = first_chart ? Rational(ker(i, 0) + lam * ker(i, 1))
                                   : Rational(lam * ker(i, 0) + ker(i, 1));
            return qpoly::trim(std::move(g));
        };
        std::vector<double> gd(ker.rows());
        for (int pass = 0; pass < 2; ++pass) {
            const int steps = pass == 0 ? 128 : 1024;
            for (int i = -steps; i <= steps; ++i) {
                const double lam_d = static_cast<double>(i) / (steps / 8);
                for (bool chart : {true, false}) {
                    for (size_t row = 0; row < ker.rows(); ++row)
                        gd[row] = chart ? dcols[0][row] + lam_d * dcols[1][row]
                                        : lam_d * dcols[0][row] + dcols[1][row];
                    if (!screen_real_rooted(gd, r)) continue;
                    Rational lam(i, steps / 8);
                    lam.canonicalize();
                    QPoly g = exact_blend(lam, chart);
                    if (!g.empty() && form_real_rooted(g, r)) return g;
                }
            }
        }
        return std::nullopt;
    }

    Rng rng(0x9d700757ULL + k);
    std::vector<double> taus_d(k - 1);
    for (int attempt = 0; attempt < 400; ++attempt) {
        const double scale = attempt % 3 == 0 ? 1.0 : (attempt % 3 == 1 ? 0.35 : 3.0);
        for (auto& t : taus_d) t = scale * rng.normal();

        // double prescreen: null direction of the (k-1) x k condition matrix
        Eigen::MatrixXd conditions(static_cast<Eigen::Index>(k - 1),
                                   static_cast<Eigen::Index>(k));
        for (std::size_t i = 0; i + 1 < k; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                double acc = 0.0;
                for (size_t c = dcols[j].size(); c-- > 0;) acc = acc * taus_d[i] + dcols[j][c];
                conditions(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = acc;
            }
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(conditions, Eigen::ComputeFullV);
        const Eigen::VectorXd w_d = svd.matrixV().col(static_cast<Eigen::Index>(k - 1));
        std::vector<double> gd(ker.rows(), 0.0);
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t i = 0; i < ker.rows(); ++i)
                gd[i] += w_d[static_cast<Eigen::Index>(j)] * dcols[j][i];
        if (!screen_real_rooted(gd, r)) continue;

        // exact redo with the same prescribed roots, then certify
        std::vector<Rational> taus;
        bool distinct = true;
        for (double t : taus_d) {
            const Rational q = rational_from_double(t);
            for (const auto& prev : taus) distinct = distinct && prev != q;
            taus.push_back(q);
        }
        if (!distinct) continue;
        RationalMatrix exact_conditions(taus.size(), k);
        for (std::size_t i = 0; i < taus.size(); ++i)
            for (std::size_t j = 0; j < k; ++j)
                exact_conditions(i, j) = qpoly::eval(cols[j], taus[i]);
        const RationalMatrix w = nullspace(exact_conditions);
        if (w.cols() == 0) continue;
        std::vector<Rational> g_vec(ker.rows(), Rational(0));
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t i = 0; i < ker.rows(); ++i) g_vec[i] += w(j, 0) * ker(i, j);
        QPoly g = qpoly::trim(std::move(g_vec));
        if (g.empty()) continue;
        if (form_real_rooted(g, r)) return g;
    }
    return std::nullopt;
}

}  // namespace

RankCertificate real_rank(const BinaryForm& f) {
    if (f.is_zero()) throw InputError("real_rank: zero form");
    const int c = complex_rank(f).rank;
    for (int r = c; r <= f.d; ++r) {
        const RationalMatrix ker = nullspace(catalecticant(f, r));
        if (ker.cols() == 0) continue;
        auto g = find_real_rooted(ker, r);
        if (!g) continue;
        std::vector<Rational> coeffs(static_cast<size_t>(r) + 1, Rational(0));
        for (size_t j = 0; j < g->size(); ++j) coeffs[j] = (*g)[j];
        return {r, BinaryForm(r, std::move(coeffs)), Field::Real};
    }
    throw InputError("real_rank: no real-rooted certificate up to degree d");
}

// ---------------------------------------------------------------------------
// Decomposition
// ---------------------------------------------------------------------------

namespace {

std::vector<BigInt> small_divisors(const BigInt& n_in, bool& complete) {
    complete = true;
    BigInt n = abs(n_in);
    if (n == 0) return {};
    std::vector<std::pair<BigInt, int>> factors;
    for (BigInt p = 2; p * p <= n && p < 10000; ++p) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            factors.emplace_back(p, e);
        }
    }
    if (n > 1) {
        if (mpz_probab_prime_p(n.get_mpz_t(), 25) > 0) {
            factors.emplace_back(n, 1);
        } else {
            complete = false;  // leftover composite we will not factor
            return {};
        }
    }
    std::vector<BigInt> divisors{1};
    for (const auto& [p, e] : factors) {
        const size_t base = divisors.size();
        BigInt pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (size_t j = 0; j < base; ++j) divisors.push_back(divisors[j] * pk);
        }
        if (divisors.size() > 4096) {
            complete = false;
            return {};
        }
    }
    return divisors;
}

// All finite roots, when they are all rational; nullopt when any root is
// irrational or the coefficients are too large to factor quickly.
std::optional<std::vector<Rational>> all_rational_roots(const QPoly& g_in) {
    QPoly g = qpoly::primitive_part(g_in);
    std::vector<Rational> roots;
    while (qpoly::degree(g) > 0) {
        if (g.front() == 0) {
            roots.emplace_back(0);
            g.erase(g.begin());
            continue;
        }
        bool const_ok = false, lead_ok = false;
        const std::vector<BigInt> ps = small_divisors(g.front().get_num(), const_ok);
        const std::vector<BigInt> qs = small_divisors(g.back().get_num(), lead_ok);
        if (!const_ok || !lead_ok) return std::nullopt;
        if (ps.size() * qs.size() > 4096) return std::nullopt;
        bool found = false;
        for (const BigInt& p : ps) {
            for (const BigInt& q : qs) {
                for (int sign : {1, -1}) {
                    Rational cand(sign * p, q);
                    cand.canonicalize();
                    if (qpoly::eval(g, cand) == 0) {
                        roots.push_back(cand);
                        g = qpoly::primitive_part(qpoly::deflate(g, cand));
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) return std::nullopt;
    }
    return roots;
}

}  // namespace

std::vector<Rational> evaluate_exact_terms(int d, const std::vector<ExactBinaryTerm>& terms) {
    std::vector<Rational> acc(static_cast<size_t>(d) + 1, Rational(0));
    const VarietySpec spec = VarietySpec::veronese(2, d);
    for (const auto& t : terms) {
        const std::vector<Rational> param{t.alpha, t.beta};
        const std::vector<Rational> pt = kernels::cone_point<Rational>(spec, param);
        for (size_t i = 0; i < acc.size(); ++i) acc[i] += t.coeff * pt[i];
    }
    return acc;
}

AmbientPoint to_ambient_point(const BinaryForm& f, Field field) {
    AmbientPoint p;
    p.spec = VarietySpec::veronese(2, f.d);
    p.field = field;
    p.re.resize(f.d + 1);
    for (int i = 0; i <= f.d; ++i) p.re[i] = to_double(f.coeffs[static_cast<size_t>(i)]);
    p.im = Eigen::VectorXd::Zero(f.d + 1);
    return p;
}

BinaryDecomposition sylvester_decompose(const RankCertificate& cert, const BinaryForm& f) {
    if (f.is_zero()) throw InputError("sylvester_decompose: zero form");
    const int r = cert.rank;
    const int d = f.d;
    const QPoly g = qpoly::trim(cert.apolar_form.coeffs);
    const int m = qpoly::degree(g);
    if (qpoly::is_zero(g) || r - m > 1 || !qpoly::square_free(g))
        throw InputError("sylvester_decompose: certificate is not square-free of the right degree");
    const bool infinity_root = (r - m == 1);

    BinaryDecomposition out;
    out.numeric.spec = VarietySpec::veronese(2, d);
    out.numeric.field = cert.field;

    // exact path: every root rational
    if (auto roots = all_rational_roots(g)) {
        if (static_cast<int>(roots->size()) == m) {
            std::vector<std::pair<Rational, Rational>> lines;
            for (const Rational& t : *roots) lines.emplace_back(1, t);
            if (infinity_root) lines.emplace_back(0, 1);

            const VarietySpec vspec = VarietySpec::veronese(2, d);
            RationalMatrix a(static_cast<size_t>(d) + 1, lines.size());
            for (size_t j = 0; j < lines.size(); ++j) {
                const std::vector<Rational> param{lines[j].first, lines[j].second};
                const std::vector<Rational> col = kernels::cone_point<Rational>(vspec, param);
                for (size_t i = 0; i <= static_cast<size_t>(d); ++i) a(i, j) = col[i];
            }
            const auto sol = solve_exact(a, f.coeffs);
            if (!sol) throw InputError("sylvester_decompose: certificate does not annihilate the form");

            std::vector<ExactBinaryTerm> terms;
            for (size_t j = 0; j < lines.size(); ++j) {
                if ((*sol)[j] == 0) continue;  // drop structurally absent directions
                terms.push_back({(*sol)[j], lines[j].first, lines[j].second});
            }
            out.exact_terms = terms;
            for (const auto& t : terms) {
                DecompositionTerm nt;
                nt.coeff_re = to_double(t.coeff);
                Eigen::VectorXd param(2);
                param << to_double(t.alpha), to_double(t.beta);
                nt.param = cert.field == Field::Real
                               ? ConeParam::real(param)
                               : ConeParam::complex(param, Eigen::VectorXd::Zero(2));
                out.numeric.terms.push_back(std::move(nt));
            }
            out.numeric.residual = std::nullopt;  // exact
            return out;
        }
    }

    // numeric path: polished roots plus a high-precision linear solve
    for (unsigned prec : {256u, 512u}) {
        std::vector<MpComplex> roots;
        for (const auto& z0 : poly_roots(g)) roots.push_back(polish_root(g, z0, prec));
        if (cert.field == Field::Real) {
            for (auto& z : roots) z.im = 0;  // certified all-real: keep the arithmetic real
        }

        std::vector<std::pair<MpComplex, MpComplex>> lines;
        for (const auto& t : roots) lines.emplace_back(MpComplex(mpf_class(1, prec), mpf_class(0, prec)), t);
        if (infinity_root)
            lines.emplace_back(MpComplex(mpf_class(0, prec), mpf_class(0, prec)),
                               MpComplex(mpf_class(1, prec), mpf_class(0, prec)));

        // columns: coefficient vectors of (alpha x + beta y)^d
        const size_t nt = lines.size();
        std::vector<std::vector<MpComplex>> cols(nt, std::vector<MpComplex>(static_cast<size_t>(d) + 1));
        for (size_t j = 0; j < nt; ++j) {
            std::vector<MpComplex> apow(static_cast<size_t>(d) + 1), bpow(static_cast<size_t>(d) + 1);
            apow[0] = MpComplex(mpf_class(1, prec), mpf_class(0, prec));
            bpow[0] = apow[0];
            for (int k = 1; k <= d; ++k) {
                apow[static_cast<size_t>(k)] = apow[static_cast<size_t>(k - 1)] * lines[j].first;
                bpow[static_cast<size_t>(k)] = bpow[static_cast<size_t>(k - 1)] * lines[j].second;
            }
            for (int k = 0; k <= d; ++k) {
                MpComplex c = apow[static_cast<size_t>(d - k)] * bpow[static_cast<size_t>(k)];
                c.re *= static_cast<long>(binom(d, k));
                c.im *= static_cast<long>(binom(d, k));
                cols[j][static_cast<size_t>(k)] = c;
            }
        }

        // normal equations A^H A c = A^H f
        std::vector<std::vector<MpComplex>> gram(nt, std::vector<MpComplex>(nt));
        std::vector<MpComplex> rhs(nt);
        for (size_t i = 0; i < nt; ++i) {
            for (size_t j = 0; j < nt; ++j) {
                MpComplex acc;
                for (int k = 0; k <= d; ++k)
                    acc = acc + cols[i][static_cast<size_t>(k)].conj() * cols[j][static_cast<size_t>(k)];
                gram[i][j] = acc;
            }
            MpComplex acc;
            for (int k = 0; k <= d; ++k) {
                MpComplex fk(mpf_class(f.coeffs[static_cast<size_t>(k)].get_num(), prec) /
                                 mpf_class(f.coeffs[static_cast<size_t>(k)].get_den(), prec),
                             mpf_class(0, prec));
                acc = acc + cols[i][static_cast<size_t>(k)].conj() * fk;
            }
            rhs[i] = acc;
        }
        const std::vector<MpComplex> sol = solve_mp(std::move(gram), std::move(rhs));

        Decomposition numeric;
        numeric.spec = VarietySpec::veronese(2, d);
        numeric.field = cert.field;
        for (size_t j = 0; j < nt; ++j) {
            DecompositionTerm t;
            const std::complex<double> c = sol[j].to_double();
            t.coeff_re = c.real();
            t.coeff_im = cert.field == Field::Real ? 0.0 : c.imag();
            Eigen::VectorXd re(2), im(2);
            const std::complex<double> a = lines[j].first.to_double();
            const std::complex<double> b = lines[j].second.to_double();
            re << a.real(), b.real();
            im << a.imag(), b.imag();
            t.param = cert.field == Field::Real ? ConeParam::real(re) : ConeParam::complex(re, im);
            numeric.terms.push_back(std::move(t));
        }

        const AmbientPoint target = to_ambient_point(f, cert.field);
        const AmbientPoint got = evaluate(numeric);
        const double resid =
            (got.as_complex() - target.as_complex()).norm() / target.as_complex().norm();
        numeric.residual = resid;
        out.numeric = numeric;
        if (resid <= 1e-10) break;  // otherwise retry with more precision
    }
    return out;
}

}  // namespace xrank
