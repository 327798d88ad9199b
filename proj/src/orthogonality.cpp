#include "meixner/orthogonality.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cstdlib>
#include <functional>

#include "meixner/detail/parallel.hpp"
#include "meixner/errors.hpp"

namespace meixner {

namespace {

nlohmann::json index_json(const MultiIndex& k) {
    return nlohmann::json(k.entries());
}

void require_positive_region(const MeixnerSpec& spec) {
    if (spec.beta() <= 0) {
        throw PreconditionViolated("inner_product: beta must be positive");
    }
    Rational sum(0);
    for (const Rational& ci : spec.point().c()) {
        if (ci <= 0) {
            throw PreconditionViolated("inner_product: all c_i must be positive");
        }
        sum += ci;
    }
    if (sum >= 1) {
        throw PreconditionViolated("inner_product: |c| must be below 1");
    }
}

void for_each_composition(int d, int total, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> parts(static_cast<std::size_t>(d), 0);
    std::function<void(int, int)> descend = [&](int axis, int remaining) {
        if (axis == d - 1) {
            parts[static_cast<std::size_t>(axis)] = remaining;
            fn(parts);
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            parts[static_cast<std::size_t>(axis)] = v;
            descend(axis + 1, remaining - v);
        }
    };
    if (d == 0) {
        if (total == 0) {
            fn(parts);
        }
        return;
    }
    descend(0, total);
}

mpfr_prec_t highprec_bits() {
    long digits = 60;
    if (const char* env = std::getenv("MEIXNER_PREC")) {
        const long parsed = std::strtol(env, nullptr, 10);
        if (parsed >= 50) {
            digits = parsed;
        }
    }
    return static_cast<mpfr_prec_t>(digits * 10 / 3 + 64);
}

// |ratio - base^exponent| <= bound * base^exponent, base > 0, evaluated in
// high-precision floating point (MEIXNER_PREC decimal digits, default 60).
bool ratio_matches_power(const Rational& ratio, const Rational& base, const Rational& exponent,
                         const Rational& bound) {
    if (base <= 0) {
        return false;  // the power is not a positive real; nothing to match
    }
    const mpfr_prec_t prec = highprec_bits();
    mpfr_t b, e, target, r, delta, limit;
    mpfr_inits2(prec, b, e, target, r, delta, limit, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_q(b, base.get_mpq_t(), MPFR_RNDN);
    mpfr_set_q(e, exponent.get_mpq_t(), MPFR_RNDN);
    mpfr_pow(target, b, e, MPFR_RNDN);
    mpfr_set_q(r, ratio.get_mpq_t(), MPFR_RNDN);
    mpfr_sub(delta, r, target, MPFR_RNDN);
    mpfr_abs(delta, delta, MPFR_RNDN);
    mpfr_set_q(limit, bound.get_mpq_t(), MPFR_RNDN);
    mpfr_mul(limit, limit, target, MPFR_RNDN);
    const bool pass = mpfr_cmp(delta, limit) <= 0;
    mpfr_clears(b, e, target, r, delta, limit, static_cast<mpfr_ptr>(nullptr));
    return pass;
}

}  // namespace

Rational weight(const MeixnerSpec& spec, const MultiIndex& x) {
    if (x.dimension() != spec.dimension()) {
        throw std::invalid_argument("weight: point dimension mismatch");
    }
    Rational result = pochhammer(spec.beta(), x.total());
    for (int i = 0; i < spec.dimension(); ++i) {
        result *= pow_int(spec.point().c()[static_cast<std::size_t>(i)], x[i]);
    }
    return result / Rational(x.factorial());
}

InnerProductResult inner_product_polys(const MeixnerSpec& spec, const SparsePolynomial& a,
                                       const SparsePolynomial& b, const Rational& tolerance,
                                       int truncation_cap) {
    require_positive_region(spec);
    if (tolerance <= 0) {
        throw std::invalid_argument("inner_product: tolerance must be positive");
    }
    const int d = spec.dimension();
    if (a.dimension() != d || b.dimension() != d) {
        throw std::invalid_argument("inner_product: polynomial dimension mismatch");
    }
    const SparsePolynomial q = a * b;
    const int degree = q.total_degree();
    // |q(x)| <= K (1+|x|)^degree on the lattice
    Rational coeff_bound(0);
    for (const auto& [exponent, coefficient] : q.terms()) {
        coeff_bound += abs(coefficient);
    }

    const Rational beta = spec.beta();
    Rational c_total(0);
    for (const Rational& ci : spec.point().c()) {
        c_total += ci;
    }

    // per-coordinate tables extended shell by shell
    std::vector<std::vector<Rational>> c_pow(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        c_pow[static_cast<std::size_t>(i)].push_back(Rational(1));
    }
    std::vector<Rational> inv_factorial{Rational(1)};
    std::vector<Rational> beta_poch{Rational(1)};

    InnerProductResult result;
    result.value = 0;
    result.tail_estimate = -1;  // replaced by the first candidate bound

    for (int shell = 0; shell <= truncation_cap; ++shell) {
        // extend tables to this shell
        for (int i = 0; i < d; ++i) {
            auto& powers = c_pow[static_cast<std::size_t>(i)];
            powers.push_back(powers.back() * spec.point().c()[static_cast<std::size_t>(i)]);
        }
        inv_factorial.push_back(inv_factorial.back() / (shell + 1));
        beta_poch.push_back(beta_poch.back() * (beta + shell));

        Rational shell_sum(0);
        for_each_composition(d, shell, [&](const std::vector<int>& parts) {
            Rational w = beta_poch[static_cast<std::size_t>(shell)];
            for (int i = 0; i < d; ++i) {
                w *= c_pow[static_cast<std::size_t>(i)][static_cast<std::size_t>(parts[
                        static_cast<std::size_t>(i)])] *
                     inv_factorial[static_cast<std::size_t>(parts[static_cast<std::size_t>(i)])];
            }
            shell_sum += w * poly_eval(q, MultiIndex(parts));
        });
        result.value += shell_sum;
        result.truncation = shell;

        // tail past X = shell: sum_{s > X} K (beta)_s |c|^s (1+s)^degree / s!
        // bounded by the first omitted term times a geometric series whose
        // ratio majorizes (beta+s)/(s+1) * |c| * ((s+2)/(s+1))^degree for
        // s >= X+1. Taking the running minimum keeps the estimate monotone.
        const int X = shell;
        Rational ratio = c_total * pow_int(Rational(X + 3) / Rational(X + 2), degree);
        const Rational drift = (beta + X + 1) / Rational(X + 2);
        if (drift > 1) {
            ratio *= drift;
        }
        if (ratio < 1) {
            const Rational first_term = coeff_bound * beta_poch.back() *
                                        pow_int(c_total, X + 1) *
                                        pow_int(Rational(X + 2), degree) *
                                        inv_factorial.back();
            const Rational candidate = first_term / (1 - ratio);
            if (result.tail_estimate < 0 || candidate < result.tail_estimate) {
                result.tail_estimate = candidate;
            }
        }
        if (result.tail_estimate >= 0 && result.tail_estimate < tolerance) {
            result.converged = true;
            return result;
        }
    }
    throw NoConvergence("inner_product: tail not certified below " + to_string(tolerance) +
                        " within truncation cap " + std::to_string(truncation_cap));
}

InnerProductResult inner_product(const MeixnerSpec& spec, const MultiIndex& n,
                                 const MultiIndex& m, const Rational& tolerance,
                                 int truncation_cap) {
    return inner_product_polys(spec, hypergeometric_polynomial(spec, n),
                               hypergeometric_polynomial(spec, m), tolerance, truncation_cap);
}

std::optional<Rational> try_rational_power(const Rational& base, const Rational& exponent) {
    if (exponent == 0) {
        return Rational(1);
    }
    if (base == 0) {
        return exponent > 0 ? std::optional<Rational>(Rational(0)) : std::nullopt;
    }
    const Integer& a = exponent.get_num();
    const Integer& b = exponent.get_den();
    if (!a.fits_slong_p() || !b.fits_ulong_p()) {
        return std::nullopt;
    }
    if (b == 1) {
        return pow_int(base, a.get_si());
    }
    const unsigned long root_order = b.get_ui();
    if (base < 0 && root_order % 2 == 0) {
        return std::nullopt;
    }
    Integer num_root;
    Integer den_root;
    const bool num_exact =
        mpz_root(num_root.get_mpz_t(), base.get_num().get_mpz_t(), root_order) != 0;
    const bool den_exact =
        mpz_root(den_root.get_mpz_t(), base.get_den().get_mpz_t(), root_order) != 0;
    if (!num_exact || !den_exact) {
        return std::nullopt;
    }
    Rational root(num_root, den_root);
    root.canonicalize();
    return pow_int(root, a.get_si());
}

NormClosedForm norm_closed_form(const MeixnerSpec& spec, const MultiIndex& n) {
    if (n.dimension() != spec.dimension()) {
        throw std::invalid_argument("norm_closed_form: degree dimension mismatch");
    }
    NormClosedForm form;
    form.base = spec.point().c0();
    form.exponent = -spec.beta();
    Rational tilde_power(1);
    for (int i = 0; i < spec.dimension(); ++i) {
        const Rational& ct = spec.point().c_tilde()[static_cast<std::size_t>(i)];
        if (ct == 0 && n[i] > 0) {
            throw ZeroParameter("norm_closed_form: c_tilde_" + std::to_string(i + 1) +
                                " is zero with n_" + std::to_string(i + 1) + " > 0");
        }
        tilde_power *= pow_int(ct, n[i]);
    }
    form.rational_factor =
        Rational(n.factorial()) / (pochhammer(spec.beta(), n.total()) * tilde_power);
    if (const std::optional<Rational> power = try_rational_power(form.base, form.exponent)) {
        form.exact = *power * form.rational_factor;
    }
    return form;
}

VerificationReport verify_orthogonality_polys(
    const MeixnerSpec& spec, const std::vector<std::pair<MultiIndex, SparsePolynomial>>& family,
    const Rational& tolerance, int truncation_cap, const Rational& relative_tolerance) {
    require_positive_region(spec);
    struct Pair {
        std::size_t first;
        std::size_t second;
    };
    std::vector<Pair> pairs;
    for (std::size_t i = 0; i < family.size(); ++i) {
        for (std::size_t j = i; j < family.size(); ++j) {
            pairs.push_back(Pair{i, j});
        }
    }
    std::vector<CheckResult> results(pairs.size());
    detail::parallel_for(pairs.size(), [&](std::size_t pi) {
        const auto& [ni, qi] = family[pairs[pi].first];
        const auto& [nj, qj] = family[pairs[pi].second];
        CheckResult check;
        check.params = {{"n", index_json(ni)}, {"m", index_json(nj)}};
        const InnerProductResult ip = inner_product_polys(spec, qi, qj, tolerance,
                                                          truncation_cap);
        check.params["truncation"] = ip.truncation;
        check.params["tail_estimate"] = to_string(ip.tail_estimate);
        if (ni == nj) {
            check.identity = "orthogonality-diagonal";
            const NormClosedForm closed = norm_closed_form(spec, ni);
            if (closed.exact.has_value()) {
                const Rational target = *closed.exact;
                check.pass = ip.converged &&
                             abs(ip.value - target) <= relative_tolerance * abs(target);
                if (!check.pass) {
                    check.witness = {{"n", index_json(ni)},
                                     {"partial_sum", to_string(ip.value)},
                                     {"closed_form", to_string(target)},
                                     {"tail_estimate", to_string(ip.tail_estimate)}};
                }
            } else {
                // c0^{-beta} is irrational: compare the ratio against a
                // high-precision evaluation of the power
                const Rational ratio = ip.value / closed.rational_factor;
                const Rational evaluation_slack(Integer(1),
                                                Integer("1" + std::string(30, '0')));
                check.pass = ip.converged &&
                             ratio_matches_power(ratio, closed.base, closed.exponent,
                                                 relative_tolerance + evaluation_slack);
                if (!check.pass) {
                    check.witness = {{"n", index_json(ni)},
                                     {"partial_sum", to_string(ip.value)},
                                     {"ratio", to_string(ratio)},
                                     {"base", to_string(closed.base)},
                                     {"exponent", to_string(closed.exponent)}};
                }
            }
        } else {
            check.identity = "orthogonality-offdiagonal";
            Rational threshold = tolerance * tolerance;
            const std::optional<Rational> scale =
                try_rational_power(spec.point().c0(), Rational(-2) * spec.beta());
            if (scale.has_value()) {
                const NormClosedForm norm_i = norm_closed_form(spec, ni);
                const NormClosedForm norm_j = norm_closed_form(spec, nj);
                const Rational product =
                    *scale * norm_i.rational_factor * norm_j.rational_factor;
                if (product > 1) {
                    threshold *= product;
                }
            }
            check.pass = ip.converged && ip.value * ip.value <= threshold;
            if (!check.pass) {
                check.witness = {{"n", index_json(ni)},
                                 {"m", index_json(nj)},
                                 {"partial_sum", to_string(ip.value)},
                                 {"tail_estimate", to_string(ip.tail_estimate)}};
            }
        }
        results[pi] = std::move(check);
    });
    VerificationReport report;
    for (CheckResult& check : results) {
        report.add(std::move(check));
    }
    return report;
}

VerificationReport verify_orthogonality(const MeixnerSpec& spec, int maxdeg,
                                        const Rational& tolerance, int truncation_cap,
                                        const Rational& relative_tolerance) {
    std::vector<std::pair<MultiIndex, SparsePolynomial>> family;
    for (const MultiIndex& n : indices_total_at_most(spec.dimension(), maxdeg)) {
        family.emplace_back(n, hypergeometric_polynomial(spec, n));
    }
    return verify_orthogonality_polys(spec, family, tolerance, truncation_cap,
                                      relative_tolerance);
}

}  // namespace meixner
