#ifndef KDVD_AIRY_HPP
#define KDVD_AIRY_HPP

namespace kdvd {

/// One evaluation of Ai and Ai' with a conservative absolute error estimate.
struct AiryEvaluation {
    double argument = 0.0;
    double value = 0.0;
    double derivative = 0.0;
    double abs_error_estimate = 0.0;
};

/// Location and value of the global maximum of |Ai| on the real line, plus
/// the headline combination 2*ai_max^2.
struct AiryExtremum {
    double x0 = 0.0;
    double ai_max = 0.0;
    double sharp_constant = 0.0; // 2 * ai_max^2
};

/// Evaluate Ai(z), Ai'(z) for |z| <= 1000.
///
/// Maclaurin series in compensated double-double arithmetic for |z| <= 9
/// (the cancellation between the two entire series grows like e^{2|z|^{3/2}/3};
/// plain double would cap out near 1e-11 by |z| ~ 7), asymptotic expansions
/// beyond (monotone side for z > 0, oscillatory sin/cos form with phase
/// 2/3|z|^{3/2} + pi/4 for z < 0). Absolute accuracy ~1e-13 or better on
/// [-50, 50]; abs_error_estimate is an upper bound on the absolute error.
AiryEvaluation airy_ai(double z);

/// Dense scan of |Ai| on [-20, 5] at step 1e-3 followed by golden-section
/// refinement to 1e-12. The global maximum sits at the first negative
/// critical point since the oscillatory envelope decays like |x|^{-1/4}.
AiryExtremum find_airy_max();

/// Empirical envelope constants over [x_min, x_max]:
///   C_ai  = sup |Ai(x)|  * (1+|x|)^{+1/4}
///   C_ai' = sup |Ai'(x)| * (1+|x|)^{-1/4}
struct DecayEnvelopes {
    double c_ai = 0.0;
    double c_ai_prime = 0.0;
};
DecayEnvelopes verify_decay_envelopes(double x_min, double x_max, int samples);

} // namespace kdvd

#endif
