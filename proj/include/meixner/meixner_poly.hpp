#pragma once

#include <functional>
#include <map>
#include <span>
#include <vector>

#include "meixner/multi_index.hpp"
#include "meixner/parameter_space.hpp"
#include "meixner/polynomial.hpp"
#include "meixner/rational.hpp"

namespace meixner {

// A parameter point paired with beta. beta must avoid 0, -1, -2, ... so the
// Pochhammer denominators (beta)_k never vanish.
class MeixnerSpec {
public:
    MeixnerSpec(MeixnerPoint point, Rational beta);

    const MeixnerPoint& point() const { return point_; }
    const Rational& beta() const { return beta_; }
    int dimension() const { return point_.dimension(); }

    bool operator==(const MeixnerSpec&) const = default;

private:
    MeixnerPoint point_;
    Rational beta_;
};

// Same beta, involuted point.
MeixnerSpec involution(const MeixnerSpec& spec);

// d x d matrix of nonnegative integers indexing one term of the
// hypergeometric sum; the enumeration below keeps column sums <= n_j.
class DegreeMatrix {
public:
    explicit DegreeMatrix(int d);

    int dimension() const { return d_; }
    int at(int i, int j) const { return entries_[index(i, j)]; }
    void set(int i, int j, int value) { entries_[index(i, j)] = value; }
    int column_sum(int j) const;
    int row_sum(int i) const;
    int total() const;
    MultiIndex row_sums() const;

    bool operator==(const DegreeMatrix&) const = default;

private:
    std::size_t index(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(d_) +
               static_cast<std::size_t>(j);
    }

    int d_;
    std::vector<int> entries_;
};

// Visits every d x d matrix A with column sums sum_i a_{i,j} <= n_j exactly
// once: column-major, lexicographic within each column.
void for_each_degree_matrix(const MultiIndex& n,
                            const std::function<void(const DegreeMatrix&)>& visit);

// P_n collected over the products of falling factorials:
//   P_n(x) = sum_r weights[r] * prod_i (-x_i)_{r_i},
// where r runs over the row-sum vectors of the degree matrices. This is the
// x-independent part of the hypergeometric sum; both the symbolic polynomial
// and pointwise evaluation derive from it.
struct PochhammerForm {
    int dimension = 0;
    std::map<MultiIndex, Rational> weights;

    Rational eval(std::span<const Rational> x) const;
    Rational eval(const MultiIndex& x) const;
    SparsePolynomial to_polynomial() const;
};

PochhammerForm pochhammer_form(const MeixnerSpec& spec, const MultiIndex& n);

// P_n(x) as an exact polynomial in x_1, ..., x_d via the hypergeometric sum
//   sum_A [prod_j (-n_j)_{colsum_j}] [prod_i (-x_i)_{rowsum_i}] /
//         (beta)_{|A|} * prod_{i,j} (1-u_{i,j})^{a_{i,j}} / a_{i,j}!.
// Total degree <= |n|; P_0 = 1.
SparsePolynomial hypergeometric_polynomial(const MeixnerSpec& spec, const MultiIndex& n);

// Coefficients of z^n, |n| <= order, in the generating function
//   G(x, z) = (1 - |z|)^{-beta-|x|} prod_i (1 - sum_j u_{i,j} z_j)^{x_i}
// for a lattice point x. The coefficient of z^n equals (beta)_{|n|}/n! P_n(x).
// Every |n| <= order appears in the result, including zero coefficients.
std::map<MultiIndex, Rational> generating_coefficients(const MeixnerSpec& spec,
                                                        const MultiIndex& x, int order);

// Direct summation of the hypergeometric series at a point; agrees exactly
// with poly_eval(hypergeometric_polynomial(spec, n), x).
Rational evaluate(const MeixnerSpec& spec, const MultiIndex& n, std::span<const Rational> x);
Rational evaluate(const MeixnerSpec& spec, const MultiIndex& n, const MultiIndex& x);

// P_n(x; m) = P_x(n; involution(m)), checked exactly.
bool duality_check(const MeixnerSpec& spec, const MultiIndex& n, const MultiIndex& x);

// Terminating Gauss hypergeometric sum 2F1(-n, -x; beta; t) for integer
// n, x >= 0: sum_a (-n)_a (-x)_a / ((beta)_a a!) t^a. At d = 1 the family
// reduces to this sum with t = 1 - u_{1,1}.
Rational gauss_2f1(int n, int x, const Rational& beta, const Rational& t);

// Exact values P_n(x) for all n and x in rectangular boxes
// 0 <= n_i <= n_max[i], 0 <= x_i <= x_max[i], computed eagerly with shared
// Pochhammer tables.
class ValueTable {
public:
    ValueTable(const MeixnerSpec& spec, const std::vector<int>& n_max,
               const std::vector<int>& x_max);

    const Rational& at(const MultiIndex& n, const MultiIndex& x) const;
    const std::vector<int>& n_max() const { return n_max_; }
    const std::vector<int>& x_max() const { return x_max_; }

private:
    std::size_t flat(const MultiIndex& k, const std::vector<int>& extent) const;

    int d_;
    std::vector<int> n_max_;
    std::vector<int> x_max_;
    std::size_t x_count_ = 1;
    std::vector<Rational> values_;
};

}  // namespace meixner
