#pragma once

#include <map>
#include <string>
#include <vector>

#include "liedual/rational.hpp"
#include "liedual/root_data.hpp"

namespace liedual {

// Exponent vector over x_1..x_n plus a trailing slot for hbar.
struct Monomial {
    std::vector<int> e;

    Monomial() = default;
    explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}
    static Monomial one(int nvars) { return Monomial(std::vector<int>(nvars + 1, 0)); }

    int nvars() const { return static_cast<int>(e.size()) - 1; }
    int degree() const;
    bool divides(const Monomial& other) const;
    Monomial operator*(const Monomial& other) const;
    Monomial divide(const Monomial& other) const;  // requires divisibility
    static Monomial lcm(const Monomial& a, const Monomial& b);
    bool coprime(const Monomial& other) const;

    bool operator==(const Monomial&) const = default;
};

// Graded reverse lexicographic, x_1 > ... > x_n > hbar, all weights 1.
bool grevlex_less(const Monomial& a, const Monomial& b);

// Exact multivariate polynomial in x_1..x_n and hbar over Q.
// Terms kept sorted descending in grevlex; no zero coefficients stored.
class MultiPoly {
  public:
    explicit MultiPoly(int nvars = 0) : nvars_(nvars) {}

    static MultiPoly zero(int nvars) { return MultiPoly(nvars); }
    static MultiPoly constant(int nvars, const Rat& c);
    static MultiPoly variable(int nvars, int i);  // x_{i+1} for 0 <= i < nvars
    static MultiPoly hbar(int nvars);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;  // -1 for zero
    std::size_t num_terms() const { return terms_.size(); }

    const std::vector<std::pair<Monomial, Rat>>& terms() const { return terms_; }
    const Monomial& leading_monomial() const;
    const Rat& leading_coeff() const;
    Rat coeff(const Monomial& m) const;

    MultiPoly operator+(const MultiPoly&) const;
    MultiPoly operator-(const MultiPoly&) const;
    MultiPoly operator-() const;
    MultiPoly operator*(const MultiPoly&) const;
    MultiPoly operator*(const Rat& c) const;
    bool operator==(const MultiPoly&) const = default;

    MultiPoly monic() const;
    MultiPoly pow(int k) const;

    // Top-degree homogeneous component.
    MultiPoly leading_form() const;
    bool is_homogeneous() const;
    bool involves_hbar() const;

    // Substitute x_i -> images[i]; hbar maps to hbar_image (or stays hbar).
    // All images must share a variable count, which becomes the result's.
    MultiPoly substitute(const std::vector<MultiPoly>& images,
                         const MultiPoly* hbar_image = nullptr) const;
    // Evaluate at a rational point (hbar must not occur).
    Rat evaluate(const std::vector<Rat>& point) const;

    void add_term(const Monomial& m, const Rat& c);  // merges, drops zeros

    std::string str(const std::vector<std::string>& names = {}) const;

  private:
    int nvars_;
    std::vector<std::pair<Monomial, Rat>> terms_;  // descending grevlex
};

MultiPoly operator*(const Rat& c, const MultiPoly& p);

// Plain substitution action: x_j -> signs[perm(j)] * x_{perm(j)}, so that
// (w.f)(v) = f(w^{-1}.v) against the point action of act_on_weight.
MultiPoly weyl_act_poly(const WeylElement& w, const MultiPoly& f);

// Harish-Chandra twisted action:
//   (w.s)(la, h) = s(w^{-1}(la + h*rho_g) - h*rho_g, h).
MultiPoly rho_shifted_act(const WeylElement& w, const MultiPoly& f,
                          const LieType& t);

// Generators of the W_L-invariant ring attached to a Levi: elementary
// symmetric polynomials per GL block, elementary symmetrics of the squared
// tail variables (types B/C), with e_{m-1}(x^2) replaced by the tail product
// for type D tails.
std::vector<MultiPoly> invariant_generators(const LeviSpec& l);

// Elementary symmetric polynomial e_k of the given variable polynomials.
MultiPoly elementary_symmetric(const std::vector<MultiPoly>& vars, int k);

// Text form: "x1^2 - 1", "2*h*x3", "h" for hbar. Used by the CLI and tests.
MultiPoly parse_poly(const std::string& text, int nvars);

}  // namespace liedual
