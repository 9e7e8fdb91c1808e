#pragma once

// Reverse-Bayes credibility analysis for a significant effect estimate.
//
// From a two-sided confidence interval the module derives the zero-mean
// sceptical prior that would render the result just non-significant, runs
// the prior-predictive conflict check against that prior, and reports the
// intrinsic-credibility threshold, the credibility ratio, the p-value for
// intrinsic credibility and the implied replication probability.
//
// Conventions:
//   - the API carries the confidence level gamma; alpha = 1 - gamma and all
//     quantiles are two-sided (z_{alpha/2})
//   - ties count as intrinsically credible (ratio <= 3 + 2*sqrt(2),
//     p <= alpha_ic, t_box^2 >= z^2); the |estimate| > S check is strict
//   - intervals with limits of mixed sign are "not significant"; the
//     low-level derivations throw NotSignificantError there, while assess()
//     returns a report with the conflict-check fields left unset
//
// All operations are pure functions over immutable values.

#include <optional>
#include <stdexcept>

#include "ancred/special_functions.hpp"

namespace ancred {

// Credibility ratio above which a significant interval stops being
// intrinsically credible at its own level: 3 + 2*sqrt(2).
inline constexpr double kCredibilityRatioBound = 5.82842712474619029;

// Multiplier defining the |estimate| > S threshold variant; quoted to four
// significant figures in the source literature, used verbatim.
inline constexpr double kPriorCheckMultiplier = 1.272;

class NotSignificantError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Two-sided confidence interval (lower, upper) at confidence level `level`
// for an effect size on an additive scale.
struct SymmetricInterval {
    double lower = 0.0;
    double upper = 0.0;
    Probability level = 0.95;
};

// Point estimate and its standard error: the (estimate, se) view of the
// same normal likelihood.
struct EffectEstimate {
    double estimate = 0.0;
    double std_error = 1.0;
};

// Zero-mean normal sceptical prior summarized by its variance and the
// half-width S of its level-gamma credible interval [-S, S].
struct ScepticalPrior {
    double variance = 0.0;
    double scepticism_limit = 0.0;
    Probability level = 0.95;
};

// Mean/variance summary of a normal distribution (used for the posterior
// and the prior-predictive).
struct NormalSummary {
    double mean = 0.0;
    double variance = 1.0;
};

// Everything assess() derives from one interval.  The conflict-check fields
// are unset when the interval is not significant (they are undefined there);
// p_value, t_statistic, p_ic, p_rep and alpha_ic are always populated.
struct CredibilityReport {
    Probability p_value = 1.0;
    double t_statistic = 0.0;
    std::optional<double> box_statistic_sq;
    std::optional<Probability> p_box;
    Probability p_ic = 1.0;
    Probability p_rep = 0.5;
    std::optional<double> credibility_ratio;
    Probability alpha_ic = 0.5;
    bool significant = false;
    bool intrinsically_credible_box = false;
    bool intrinsically_credible_matthews = false;
};

// Throws std::invalid_argument unless lower < upper and both are finite.
void validate(const SymmetricInterval& ci);
// Throws std::invalid_argument unless std_error > 0 and both fields finite.
void validate(const EffectEstimate& est);

// True when both limits share a strict sign.
bool is_significant(const SymmetricInterval& ci);

// Midpoint and half-width / z_{alpha/2} of the interval.
EffectEstimate interval_to_estimate(const SymmetricInterval& ci);

// Inverse of interval_to_estimate: estimate -+ z_{alpha/2} * std_error.
SymmetricInterval estimate_to_interval(const EffectEstimate& est, Probability level);

// Scepticism limit S = (U - L)^2 / (4 * sqrt(U * L)); level-free.
// Throws NotSignificantError when the limits do not share a strict sign.
double scepticism_limit(const SymmetricInterval& ci);

// Sceptical prior variance tau^2 = sigma^2 / (t^2 / z_{alpha/2}^2 - 1).
// Throws NotSignificantError unless t^2 > z_{alpha/2}^2.
double sceptical_prior_variance(const EffectEstimate& est, Probability alpha);

// Bundles tau^2 and S for the interval; S = z_{alpha/2} * tau holds.
ScepticalPrior derive_sceptical_prior(const SymmetricInterval& ci);

// Normal-normal conjugate update of `prior` with the likelihood `est`.
NormalSummary posterior_from_prior(const NormalSummary& prior, const EffectEstimate& est);

// Squared conflict-check statistic t_box^2 = t^2 - z_{alpha/2}^2, equal to
// estimate^2 / (tau^2 + sigma^2) against the prior-predictive N(0, tau^2 + sigma^2).
double box_statistic_sq(const EffectEstimate& est, Probability alpha);

// Same statistic computed straight from the interval limits:
// z_{alpha/2}^2 * 4*U*L / (U - L)^2.
double box_statistic_sq_from_interval(const SymmetricInterval& ci);

// Prior-predictive tail probability Pr(chi^2(1) >= t_box^2); small values
// signal conflict between the sceptical prior and the data.
Probability p_box(const EffectEstimate& est, Probability alpha);

// Threshold on the conventional two-sided p-value equivalent to intrinsic
// credibility at level 1 - alpha: 2 * (1 - Phi(sqrt(2) * z_{alpha/2})).
Probability intrinsic_credibility_threshold(Probability alpha);

// The larger threshold implied by the prior-interval check |estimate| > S:
// 2 * (1 - Phi(1.272 * z_{alpha/2})).
Probability matthews_threshold(Probability alpha);

// The prior-interval check itself: |estimate| strictly above S.
bool matthews_credibility_check(const EffectEstimate& est, const ScepticalPrior& prior);

// U/L, or L/U when both limits are negative.  Always > 1 for a significant
// interval; credible at the interval's level iff <= kCredibilityRatioBound.
double credibility_ratio(const SymmetricInterval& ci);

// p-value for intrinsic credibility: 2 * (1 - Phi(t / sqrt(2))) with
// t = Phi^-1(1 - p/2).  Strictly larger than p.
Probability p_intrinsic(Probability p);

// Probability that an identically designed replication lands on the same
// side of zero: 1 - p_ic / 2.
Probability p_replication(Probability p_ic);

// Full report for one interval.  Never throws for a well-formed interval;
// non-significant inputs yield significant = false with the conflict-check
// fields unset.
CredibilityReport assess(const SymmetricInterval& ci);

}  // namespace ancred
