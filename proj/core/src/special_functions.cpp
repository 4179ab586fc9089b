#include "bhc/special_functions.hpp"

namespace bhc {

LogValue LogValue::from_ln(double ln_value) {
    if (!std::isfinite(ln_value))
        throw std::domain_error("LogValue: ln must be finite");
    return LogValue{ln_value};
}

LogValue LogValue::from_value(double v) {
    if (!std::isfinite(v) || !(v > 0.0))
        throw std::domain_error("LogValue: value must be finite and > 0");
    return LogValue{std::log(v)};
}

namespace {

constexpr double half_ln_two_pi = 0.9189385332046727417803297364056;

// Lanczos, g = 607/128, 15 terms
constexpr double lanczos_cof[15] = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

double lanczos_log_gamma(double x) {
    double t = x + 4.2421875; // x + g - 0.5, g = 607/128
    double a = lanczos_cof[0];
    for (int i = 1; i < 15; ++i)
        a += lanczos_cof[i] / (x - 1.0 + i);
    return half_ln_two_pi + (x - 0.5) * std::log(t) - t + std::log(a);
}

// Taylor coefficients of ln Gamma about the zeros at x=1 and x=2, needed to
// keep the error *relative* where the function itself vanishes:
//   ln Gamma(1+t) = t*(-euler_gamma + t*P1(t)),  P1 coeffs (-1)^k zeta(k)/k
//   ln Gamma(2+t) = t*((1-euler_gamma) + t*P2(t)),  P2 coeffs (-1)^k (zeta(k)-1)/k
// k = 2..40; tails < 1e-22 for |t| <= 0.3.
constexpr double zeta_c1[39] = {
    0.8224670334241132182362, -0.4006856343865314284666,
    0.2705808084277845478790, -0.2073855510286739852663,
    0.1695571769974081899524, -0.1440498967688461181200,
    0.1255096695247430424223, -0.1113342658695646904909,
    0.1000994575127818085337, -0.09095401714582904223261,
    0.08335384054610900402489, -0.07693251641135219147283,
    0.07143294629536133605923, -0.06666870588242046803290,
    0.06250095514121304074198, -0.05882397865868458233896,
    0.05555576762740361110221, -0.05263167937961666073363,
    0.05000004769810169363981, -0.04761907033014222799078,
    0.04545455629320466944241, -0.04347826605304025936135,
    0.04166666915034121046914, -0.04000000119214014058609,
    0.03846153903467518570635, -0.03703703731298932554946,
    0.03571428584733335802816, -0.03448275868491930081079,
    0.03333333336437758108066, -0.03225806453115041633882,
    0.03125000000727597448024, -0.03030303030655804550688,
    0.02941176470759434473174, -0.02857142857226011001271,
    0.02777777777818199783031, -0.02702702702722367459014,
    0.02631578947377994683019, -0.02564102564107228178591,
    0.02500000000002273736960,
};
constexpr double zeta_c2[39] = {
    0.3224670334241132182362, -0.06735230105319809513325,
    0.02058080842778454787900, -0.007385551028673985266273,
    0.002890510330741523285753, -0.001192753911703260977114,
    0.0005096695247430424223357, -0.0002231547584535793797614,
    0.00009945751278180853371460, -0.00004492623673813314170021,
    0.00002050721277567069155317, -0.000009439488275268395903987,
    0.000004374866789907487804182, -0.000002039215753801366236782,
    9.551412130407419832857e-7, -4.492469198764566043294e-7,
    2.120718480555466586923e-7, -1.004322482396809960872e-7,
    4.769810169363980565760e-8, -2.271109460894316491032e-8,
    1.083865921489695409107e-8, -5.183475041970046655121e-9,
    2.483674543802478317185e-9, -1.192140140586091207443e-9,
    5.731367241678862013330e-10, -2.759522885124233145178e-10,
    1.330476437424448948150e-10, -6.422964563838100022082e-11,
    3.104424774732227276239e-11, -1.502138408075414217093e-11,
    7.275974480239079662505e-12, -3.527742476575915083615e-12,
    1.711991790559617908601e-12, -8.315385841420284819798e-13,
    4.042200525289440065536e-13, -1.966475631096616490411e-13,
    9.573630387838555763782e-14, -4.664076026428374224576e-14,
    2.273736960065972320633e-14,
};

double horner39(const double (&c)[39], double t) {
    double p = c[38];
    for (int i = 37; i >= 0; --i)
        p = p * t + c[i];
    return p;
}

} // namespace

double log_gamma(double x) {
    if (!std::isfinite(x) || !(x > 0.0))
        throw std::domain_error("log_gamma: requires finite x > 0");
    if (x == 1.0 || x == 2.0)
        return 0.0;
    if (x < 0.7)
        return log_gamma(x + 1.0) - std::log(x);
    if (std::abs(x - 1.0) <= 0.3) {
        double t = x - 1.0;
        return t * (-constants::euler_gamma + t * horner39(zeta_c1, t));
    }
    if (std::abs(x - 2.0) <= 0.3) {
        double t = x - 2.0;
        return t * ((1.0 - constants::euler_gamma) + t * horner39(zeta_c2, t));
    }
    return lanczos_log_gamma(x);
}

double compensated_sum(std::span<const double> terms) {
    CompensatedAccumulator acc;
    for (double t : terms) {
        if (!std::isfinite(t))
            throw std::domain_error("compensated_sum: non-finite term");
        acc.add(t);
    }
    return acc.value();
}

} // namespace bhc
