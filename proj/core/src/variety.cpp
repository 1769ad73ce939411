#include "xrank/variety.hpp"

#include <numeric>
#include <sstream>

namespace xrank {

std::string family_name(Family f) {
    switch (f) {
        case Family::Veronese: return "veronese";
        case Family::Segre: return "segre";
        case Family::Grassmannian: return "grassmannian";
        case Family::PowerOfForms: return "power_of_forms";
    }
    return "?";
}

std::string field_name(Field f) {
    return f == Field::Real ? "real" : "complex";
}

VarietySpec VarietySpec::veronese(int n_vars, int degree) {
    if (n_vars < 2 || degree < 1) throw InputError("veronese: need n >= 2, d >= 1");
    VarietySpec s;
    s.family_ = Family::Veronese;
    s.n_vars_ = n_vars;
    s.degree_ = degree;
    s.ambient_dim_ = monomial_count(n_vars, degree);
    s.param_dim_ = n_vars;
    return s;
}

VarietySpec VarietySpec::segre(std::vector<int> formats) {
    if (formats.size() < 2) throw InputError("segre: need at least two factors");
    for (int f : formats)
        if (f < 2) throw InputError("segre: each format must be >= 2");
    VarietySpec s;
    s.family_ = Family::Segre;
    s.formats_ = std::move(formats);
    s.ambient_dim_ = 1;
    s.param_dim_ = 0;
    for (int f : s.formats_) {
        s.ambient_dim_ *= f;
        s.param_dim_ += f;
    }
    return s;
}

VarietySpec VarietySpec::grassmannian(int k, int m) {
    if (k < 2 || m <= k) throw InputError("grassmannian: need k >= 2, m > k");
    VarietySpec s;
    s.family_ = Family::Grassmannian;
    s.gr_k_ = k;
    s.gr_m_ = m;
    s.ambient_dim_ = binom(m, k);
    s.param_dim_ = static_cast<std::int64_t>(k) * m;
    return s;
}

VarietySpec VarietySpec::power_of_forms(int n_vars, int degree, int power) {
    if (n_vars < 2 || degree < 1 || power < 2)
        throw InputError("power_of_forms: need n >= 2, d >= 1, k >= 2");
    VarietySpec s;
    s.family_ = Family::PowerOfForms;
    s.n_vars_ = n_vars;
    s.degree_ = degree;
    s.power_ = power;
    s.ambient_dim_ = monomial_count(n_vars, power * degree);
    s.param_dim_ = monomial_count(n_vars, degree);
    return s;
}

int VarietySpec::homogeneity_weight() const {
    switch (family_) {
        case Family::Veronese: return degree_;
        case Family::Segre: return static_cast<int>(formats_.size());
        case Family::Grassmannian: return gr_k_;
        case Family::PowerOfForms: return power_;
    }
    return 0;
}

std::string VarietySpec::to_string() const {
    std::ostringstream os;
    switch (family_) {
        case Family::Veronese: os << "veronese(" << n_vars_ << "," << degree_ << ")"; break;
        case Family::Segre: {
            os << "segre([";
            for (size_t i = 0; i < formats_.size(); ++i) os << (i ? "," : "") << formats_[i];
            os << "])";
            break;
        }
        case Family::Grassmannian: os << "grassmannian(" << gr_k_ << "," << gr_m_ << ")"; break;
        case Family::PowerOfForms:
            os << "power_of_forms(" << n_vars_ << "," << degree_ << "," << power_ << ")";
            break;
    }
    return os.str();
}

bool VarietySpec::operator==(const VarietySpec& o) const {
    return family_ == o.family_ && n_vars_ == o.n_vars_ && degree_ == o.degree_ &&
           power_ == o.power_ && gr_k_ == o.gr_k_ && gr_m_ == o.gr_m_ && formats_ == o.formats_;
}

ConeParam ConeParam::real(Eigen::VectorXd values) {
    ConeParam p;
    p.field = Field::Real;
    p.im = Eigen::VectorXd::Zero(values.size());
    p.re = std::move(values);
    return p;
}

ConeParam ConeParam::complex(Eigen::VectorXd re, Eigen::VectorXd im) {
    if (re.size() != im.size()) throw InputError("ConeParam: re/im length mismatch");
    ConeParam p;
    p.field = Field::Complex;
    p.re = std::move(re);
    p.im = std::move(im);
    return p;
}

Eigen::VectorXcd ConeParam::as_complex() const {
    Eigen::VectorXcd v(re.size());
    v.real() = re;
    v.imag() = im;
    return v;
}

bool ConeParam::is_zero() const {
    return re.isZero(0.0) && im.isZero(0.0);
}

Eigen::VectorXcd AmbientPoint::as_complex() const {
    Eigen::VectorXcd v(re.size());
    v.real() = re;
    v.imag() = im;
    return v;
}

double AmbientPoint::norm() const {
    return std::sqrt(re.squaredNorm() + im.squaredNorm());
}

AmbientPoint cone_point(const VarietySpec& spec, const ConeParam& param) {
    AmbientPoint out;
    out.spec = spec;
    out.field = param.field;
    if (param.field == Field::Real) {
        std::vector<double> p(param.re.data(), param.re.data() + param.re.size());
        const std::vector<double> v = kernels::cone_point<double>(spec, p);
        out.re = Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
        out.im = Eigen::VectorXd::Zero(out.re.size());
    } else {
        const Eigen::VectorXcd pc = param.as_complex();
        std::vector<std::complex<double>> p(pc.data(), pc.data() + pc.size());
        const std::vector<std::complex<double>> v =
            kernels::cone_point<std::complex<double>>(spec, p);
        out.re.resize(static_cast<Eigen::Index>(v.size()));
        out.im.resize(static_cast<Eigen::Index>(v.size()));
        for (Eigen::Index i = 0; i < out.re.size(); ++i) {
            out.re[i] = v[static_cast<size_t>(i)].real();
            out.im[i] = v[static_cast<size_t>(i)].imag();
        }
    }
    return out;
}

Eigen::MatrixXcd cone_jacobian_complex(const VarietySpec& spec, const Eigen::VectorXcd& param) {
    std::vector<std::complex<double>> p(param.data(), param.data() + param.size());
    const auto jac = kernels::cone_jacobian<std::complex<double>>(spec, p);
    Eigen::MatrixXcd out(jac.rows(), jac.cols());
    for (std::size_t i = 0; i < jac.rows(); ++i)
        for (std::size_t j = 0; j < jac.cols(); ++j)
            out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = jac(i, j);
    return out;
}

Eigen::MatrixXd cone_jacobian_real(const VarietySpec& spec, const Eigen::VectorXd& param) {
    std::vector<double> p(param.data(), param.data() + param.size());
    const auto jac = kernels::cone_jacobian<double>(spec, p);
    Eigen::MatrixXd out(jac.rows(), jac.cols());
    for (std::size_t i = 0; i < jac.rows(); ++i)
        for (std::size_t j = 0; j < jac.cols(); ++j)
            out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = jac(i, j);
    return out;
}

AmbientPoint evaluate(const Decomposition& dec) {
    Eigen::VectorXcd acc = Eigen::VectorXcd::Zero(dec.spec.ambient_affine_dim());
    for (const auto& term : dec.terms) {
        if (term.param.field != dec.field)
            throw InputError("evaluate: term field differs from decomposition field");
        if (dec.field == Field::Real && term.coeff_im != 0.0)
            throw InputError("evaluate: real decomposition with complex coefficient");
        if (term.param.re.size() != dec.spec.param_dim())
            throw InputError("evaluate: term parameter length does not match spec");
        if (term.param.is_zero())
            throw InputError("evaluate: decomposition term with zero parameter");
        ConeParam p = term.param;
        p.field = dec.field;
        const AmbientPoint pt = cone_point(dec.spec, p);
        acc += std::complex<double>(term.coeff_re, term.coeff_im) * pt.as_complex();
    }
    AmbientPoint out;
    out.spec = dec.spec;
    out.field = dec.field;
    out.re = acc.real();
    out.im = dec.field == Field::Real ? Eigen::VectorXd::Zero(acc.size()).eval()
                                      : acc.imag().eval();
    return out;
}

}  // namespace xrank
