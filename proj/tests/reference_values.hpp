#pragma once

// Frozen reference values for the test suites.
// Computed once with 50-digit arithmetic (mpmath erfc/erfinv) and rounded
// to the nearest double.  Independent of everything under src/.

#include <cstddef>

namespace refs {

inline constexpr double kZ975 = 1.9599639845400543;   // Phi^-1(0.975)
inline constexpr double kZ95  = 1.6448536269514726;   // Phi^-1(0.95)
inline constexpr double kZ995 = 2.575829303548901;   // Phi^-1(0.995)
inline constexpr double kZ975Sq = 3.841458820694126;

// (x, Phi(x)) pairs, |x| <= 8
inline constexpr struct { double x, phi; } kNormalCdf[] = {
    {0.0, 0.5},
    {0.125, 0.5497382248301129},
    {-0.125, 0.4502617751698871},
    {0.25, 0.5987063256829237},
    {-0.25, 0.4012936743170763},
    {0.5, 0.6914624612740131},
    {-0.5, 0.3085375387259869},
    {1.0, 0.8413447460685429},
    {-1.0, 0.15865525393145705},
    {1.5, 0.9331927987311419},
    {-1.5, 0.06680720126885807},
    {1.959964, 0.9750000009035577},
    {2.0, 0.9772498680518208},
    {-2.0, 0.02275013194817921},
    {2.5, 0.9937903346742238},
    {-2.5, 0.006209665325776135},
    {3.0, 0.9986501019683699},
    {-3.0, 0.0013498980316300946},
    {3.5, 0.9997673709209645},
    {-3.5, 0.00023262907903552504},
    {4.0, 0.9999683287581669},
    {-4.0, 3.1671241833119924e-05},
    {5.0, 0.9999997133484281},
    {-5.0, 2.866515718791939e-07},
    {6.0, 0.9999999990134123},
    {-6.0, 9.86587645037698e-10},
    {7.0, 0.9999999999987201},
    {-7.0, 1.279812543885835e-12},
    {8.0, 0.9999999999999993},
    {-8.0, 6.220960574271784e-16},
};

// (p, Phi^-1(p)) pairs
inline constexpr struct { double p, z; } kNormalQuantile[] = {
    {1e-12, -7.034483825301132},
    {1e-09, -5.9978070150076865},
    {1e-06, -4.753424308822899},
    {0.001, -3.0902323061678136},
    {0.01, -2.326347874040841},
    {0.025, -1.9599639845400543},
    {0.05, -1.6448536269514726},
    {0.1, -1.2815515655446004},
    {0.25, -0.6744897501960817},
    {0.4, -0.2533471031357998},
    {0.5, 0.0},
    {0.6, 0.2533471031357998},
    {0.75, 0.6744897501960817},
    {0.9, 1.2815515655446004},
    {0.95, 1.6448536269514726},
    {0.975, 1.9599639845400543},
    {0.99, 2.326347874040841},
    {0.999, 3.0902323061678136},
    {0.999999, 4.753424308822899},
};

// (x, Pr(chi2(1) >= x)) pairs
inline constexpr struct { double x, tail; } kChi1Tail[] = {
    {0.0, 1.0},
    {0.1, 0.7518296340458492},
    {0.5, 0.4795001221869535},
    {1.0, 0.3173105078629141},
    {2.0, 0.15729920705028513},
    {3.841459, 0.04999999465319577},
    {5.0, 0.025347318677468263},
    {6.8292, 0.008967942340510017},
    {10.0, 0.0015654022580025497},
    {20.0, 7.744216431044084e-06},
    {40.0, 2.539628589470865e-10},
    {64.0, 1.2441921148543568e-15},
};

// Intrinsic-credibility and Matthews thresholds
inline constexpr double kAlphaIc005 = 0.005574596680784411;
inline constexpr double kAlphaIc010 = 0.020009253716118034;
inline constexpr double kAlphaIc001 = 0.00026971695663148304;
inline constexpr double kMatthews005 = 0.012664238229458016;
inline constexpr double kMatthews010 = 0.03641581692605501;

inline constexpr double kPIcOf00011 = 0.021014421848040723;
inline constexpr double kPIcOf0017  = 0.09147704762772664;
inline constexpr double kPIcOf00056 = 0.05012248755872683;

// Study A: interval (1, 4) at level 0.95
inline constexpr double kAEstimate = 2.5;
inline constexpr double kAStdErr = 0.7653201853869809;
inline constexpr double kAT = 3.2666066409000902;
inline constexpr double kAP = 0.001088448042348013;
inline constexpr double kAS = 1.125;
inline constexpr double kATau2 = 0.32946467971542903;
inline constexpr double kATBox2 = 6.829260125678446;
inline constexpr double kAPBox = 0.008967640459553047;
inline constexpr double kAPIc = 0.020897030076114674;
inline constexpr double kAPRep = 0.9895514849619427;
inline constexpr double kAPostMean = 0.9;
inline constexpr double kAPostVar = 0.2108573950178746;
inline constexpr double kAFlip = 0.010448515038057337;

// Study B: interval (1/3, 10/3) at level 0.95, limits as nearest doubles
inline constexpr double kBEstimate = 1.8333333333333335;
inline constexpr double kBStdErr = 0.7653201853869809;
inline constexpr double kBT = 2.395511536660066;
inline constexpr double kBP = 0.016597191924562504;
inline constexpr double kBS = 2.1345374206136563;
inline constexpr double kBTau2 = 1.1860728469755448;
inline constexpr double kBTBox2 = 1.8970167015773458;
inline constexpr double kBPBox = 0.16841262549922145;
inline constexpr double kBPIc = 0.09028762211430688;
inline constexpr double kBPRep = 0.9548561889428465;
inline constexpr double kBPostMean = 1.2272727272727273;
inline constexpr double kBPostVar = 0.3920901973472875;
inline constexpr double kBFlip = 0.04514381105715344;

// Values at the literal rounded inputs (estimate 2.5 or 1.833333, se 0.765307)
inline constexpr double kRoundedTau2  = 0.3294355903366531;
inline constexpr double kRoundedTBox2 = 6.829627818044264;
inline constexpr double kRoundedTBox2B = 1.8972123515706558;
inline constexpr double kRoundedFlipA = 0.010447413066072393;
inline constexpr double kRoundedFlipB = 0.045141067049889766;

inline constexpr double kCredRatioBound = 5.82842712474619;  // 3 + 2*sqrt(2)
inline constexpr double kPhiAt1959964 = 0.9750000009035577;

}  // namespace refs
