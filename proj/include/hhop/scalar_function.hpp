#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hhop {

// Real continuous function on an interval [lo, hi] (extended reals allowed).
// Evaluating outside the domain is an error; `deriv` is optional and present
// for every registry function.
class ScalarFunction {
public:
    using Fn = std::function<double(double)>;

    ScalarFunction(Fn eval, double lo, double hi, std::string label, Fn deriv = nullptr)
        : eval_(std::move(eval)), deriv_(std::move(deriv)),
          lo_(lo), hi_(hi), label_(std::move(label)) {
        if (!(lo_ < hi_))
            throw std::invalid_argument("ScalarFunction: domain requires lo < hi");
        if (!eval_) throw std::invalid_argument("ScalarFunction: null evaluator");
    }

    double operator()(double t) const {
        if (t < lo_ || t > hi_)
            throw std::domain_error("ScalarFunction '" + label_ + "': argument " +
                                    std::to_string(t) + " outside domain");
        return eval_(t);
    }

    bool has_derivative() const { return static_cast<bool>(deriv_); }

    double derivative(double t) const {
        if (!deriv_)
            throw std::logic_error("ScalarFunction '" + label_ + "': no derivative");
        if (t < lo_ || t > hi_)
            throw std::domain_error("ScalarFunction '" + label_ + "': argument " +
                                    std::to_string(t) + " outside domain");
        return deriv_(t);
    }

    double lo() const { return lo_; }
    double hi() const { return hi_; }
    const std::string& label() const { return label_; }

    bool contains(double t) const { return t >= lo_ && t <= hi_; }

private:
    Fn eval_;
    Fn deriv_;
    double lo_;
    double hi_;
    std::string label_;
};

constexpr double kInf = std::numeric_limits<double>::infinity();

inline ScalarFunction make_square() {
    return ScalarFunction([](double t) { return t * t; }, -kInf, kInf, "square",
                          [](double t) { return 2.0 * t; });
}

inline ScalarFunction make_cube() {
    return ScalarFunction([](double t) { return t * t * t; }, -kInf, kInf, "cube",
                          [](double t) { return 3.0 * t * t; });
}

inline ScalarFunction make_exp() {
    return ScalarFunction([](double t) { return std::exp(t); }, -kInf, kInf, "exp",
                          [](double t) { return std::exp(t); });
}

inline ScalarFunction make_abs_neg() {
    return ScalarFunction([](double t) { return -std::abs(t); }, -kInf, kInf, "abs-neg",
                          [](double t) { return t > 0.0 ? -1.0 : (t < 0.0 ? 1.0 : 0.0); });
}

inline ScalarFunction make_identity() {
    return ScalarFunction([](double t) { return t; }, -kInf, kInf, "identity",
                          [](double) { return 1.0; });
}

inline ScalarFunction make_affine(double a, double b) {
    return ScalarFunction([a, b](double t) { return a + b * t; }, -kInf, kInf,
                          "affine(" + std::to_string(a) + "," + std::to_string(b) + ")",
                          [b](double) { return b; });
}

inline ScalarFunction make_constant(double c) {
    return ScalarFunction([c](double) { return c; }, -kInf, kInf,
                          "constant(" + std::to_string(c) + ")",
                          [](double) { return 0.0; });
}

// Polynomial with coefficients in ascending degree order; Horner evaluation.
inline ScalarFunction make_polynomial(const std::vector<double>& coeffs,
                                      std::string label = "poly") {
    if (coeffs.empty()) throw std::invalid_argument("make_polynomial: empty coefficients");
    std::vector<double> dcoeffs;
    for (std::size_t k = 1; k < coeffs.size(); ++k)
        dcoeffs.push_back(static_cast<double>(k) * coeffs[k]);
    if (dcoeffs.empty()) dcoeffs.push_back(0.0);
    auto horner = [](const std::vector<double>& c, double t) {
        double v = 0.0;
        for (std::size_t k = c.size(); k-- > 0;) v = v * t + c[k];
        return v;
    };
    return ScalarFunction([coeffs, horner](double t) { return horner(coeffs, t); },
                          -kInf, kInf, std::move(label),
                          [dcoeffs, horner](double t) { return horner(dcoeffs, t); });
}

inline std::vector<double> poly_add(std::vector<double> a, const std::vector<double>& b,
                                    double alpha = 1.0, double beta = 1.0) {
    if (b.size() > a.size()) a.resize(b.size(), 0.0);
    for (std::size_t k = 0; k < a.size(); ++k)
        a[k] = alpha * a[k] + (k < b.size() ? beta * b[k] : 0.0);
    return a;
}

inline std::vector<double> poly_mul(const std::vector<double>& a,
                                    const std::vector<double>& b) {
    std::vector<double> c(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

// Resolves a registry name: square, cube, exp, abs-neg, identity,
// affine(a,b), constant(c).
inline ScalarFunction make_function(const std::string& name) {
    if (name == "square") return make_square();
    if (name == "cube") return make_cube();
    if (name == "exp") return make_exp();
    if (name == "abs-neg") return make_abs_neg();
    if (name == "identity") return make_identity();

    auto parse_args = [&name](const std::string& head) -> std::vector<double> {
        const std::string prefix = head + "(";
        if (name.rfind(prefix, 0) != 0 || name.back() != ')') return {};
        std::vector<double> out;
        std::string body = name.substr(prefix.size(), name.size() - prefix.size() - 1);
        std::size_t pos = 0;
        while (pos <= body.size()) {
            std::size_t comma = body.find(',', pos);
            std::string tok = body.substr(pos, comma == std::string::npos
                                                   ? std::string::npos
                                                   : comma - pos);
            try {
                std::size_t used = 0;
                out.push_back(std::stod(tok, &used));
                if (used != tok.size()) return {};
            } catch (const std::exception&) {
                return {};
            }
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        return out;
    };

    if (auto args = parse_args("affine"); args.size() == 2)
        return make_affine(args[0], args[1]);
    if (auto args = parse_args("constant"); args.size() == 1)
        return make_constant(args[0]);

    throw std::invalid_argument(
        "unknown function '" + name +
        "'; registry: square, cube, exp, abs-neg, identity, affine(a,b), constant(c)");
}

} // namespace hhop
