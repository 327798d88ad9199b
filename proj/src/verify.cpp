#include "meixner/verify.hpp"

#include <stdexcept>

#include "meixner/detail/parallel.hpp"

namespace meixner {

namespace {

nlohmann::json index_json(const MultiIndex& k) {
    return nlohmann::json(k.entries());
}

}  // namespace

VerificationReport verify_cross_representation(const MeixnerSpec& spec, int maxdeg, int grid) {
    const int d = spec.dimension();
    const std::vector<MultiIndex> degrees = indices_total_at_most(d, maxdeg);
    const std::vector<MultiIndex> points = indices_in_box(d, grid);

    std::vector<PochhammerForm> forms(degrees.size());
    detail::parallel_for(degrees.size(), [&](std::size_t k) {
        forms[k] = pochhammer_form(spec, degrees[k]);
    });
    std::vector<Rational> rescale(degrees.size());
    for (std::size_t k = 0; k < degrees.size(); ++k) {
        rescale[k] = Rational(degrees[k].factorial()) /
                     pochhammer(spec.beta(), degrees[k].total());
    }

    std::vector<CheckResult> results(points.size());
    detail::parallel_for(points.size(), [&](std::size_t xi) {
        const MultiIndex& x = points[xi];
        CheckResult check;
        check.identity = "cross-representation";
        check.params = {{"x", index_json(x)}, {"maxdeg", maxdeg}};
        check.pass = true;
        const auto coefficients = generating_coefficients(spec, x, maxdeg);
        for (std::size_t k = 0; k < degrees.size(); ++k) {
            const Rational from_series = coefficients.at(degrees[k]) * rescale[k];
            const Rational from_sum = forms[k].eval(x);
            if (from_series != from_sum) {
                check.pass = false;
                check.witness = {{"n", index_json(degrees[k])},
                                 {"x", index_json(x)},
                                 {"generating_function", to_string(from_series)},
                                 {"hypergeometric", to_string(from_sum)}};
                break;
            }
        }
        results[xi] = std::move(check);
    });

    VerificationReport report;
    for (CheckResult& check : results) {
        report.add(std::move(check));
    }
    return report;
}

VerificationReport verify_duality(const MeixnerSpec& spec, int box) {
    const int d = spec.dimension();
    const std::vector<int> extent(static_cast<std::size_t>(d), box);
    const ValueTable direct(spec, extent, extent);
    const ValueTable twisted(involution(spec), extent, extent);
    const std::vector<MultiIndex> degrees = indices_in_box(extent);

    std::vector<CheckResult> results(degrees.size());
    detail::parallel_for(degrees.size(), [&](std::size_t ni) {
        const MultiIndex& n = degrees[ni];
        CheckResult check;
        check.identity = "duality";
        check.params = {{"n", index_json(n)}, {"box", box}};
        check.pass = true;
        for (const MultiIndex& x : degrees) {
            if (direct.at(n, x) != twisted.at(x, n)) {
                check.pass = false;
                check.witness = {{"n", index_json(n)},
                                 {"x", index_json(x)},
                                 {"direct", to_string(direct.at(n, x))},
                                 {"involuted", to_string(twisted.at(x, n))}};
                break;
            }
        }
        results[ni] = std::move(check);
    });

    VerificationReport report;
    for (CheckResult& check : results) {
        report.add(std::move(check));
    }
    return report;
}

VerificationReport verify_classical_reduction(const MeixnerSpec& spec, int max_n, int max_x) {
    if (spec.dimension() != 1) {
        throw std::invalid_argument("verify_classical_reduction: requires d = 1");
    }
    const Rational t = 1 - spec.point().u(1, 1);
    VerificationReport report;
    for (int n = 0; n <= max_n; ++n) {
        CheckResult check;
        check.identity = "classical-reduction";
        check.params = {{"n", n}, {"max_x", max_x}};
        check.pass = true;
        for (int x = 0; x <= max_x; ++x) {
            const Rational value = evaluate(spec, MultiIndex(std::vector<int>{n}),
                                            MultiIndex(std::vector<int>{x}));
            const Rational sum = gauss_2f1(n, x, spec.beta(), t);
            if (value != sum) {
                check.pass = false;
                check.witness = {{"n", n},
                                 {"x", x},
                                 {"value", to_string(value)},
                                 {"gauss_sum", to_string(sum)}};
                break;
            }
        }
        report.add(std::move(check));
    }
    return report;
}

}  // namespace meixner
