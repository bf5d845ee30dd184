// Frozen reference values generated by tests/oracle/generate_reference.py.
// Statistics from scipy.stats 1.15.3, special functions from mpmath 1.3.0.
// Do not edit by hand; rerun the generator instead.
#pragma once

namespace twoarm::testref {

// Shapiro-Wilk: data plus scipy.stats.shapiro (W, p).
inline constexpr double kSw_arith20[] = {1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0, 9.0, 10.0, 11.0, 12.0, 13.0, 14.0, 15.0, 16.0, 17.0, 18.0, 19.0, 20.0};
inline constexpr double kSw_arith20_w = 0.9603751832429884;
inline constexpr double kSw_arith20_p = 0.5513717457916771;
inline constexpr double kSw_skewed20[] = {8.76778049393926, 2.750948258821457, 3.076301161557805, 3.0041904066100105, 24.872691160449392, 31.114356109535567, 54.574242777284454, 20.591314181012446, 1.4344765744180203, 1.710737244128815, 25.618672314520676, 11.05286061453402, 7.579661418127703, 1.2237141726648104, 2.875870606745153, 19.00608329406702, 1.0752155290087178, 11.876922617457529, 7.725044935814664, 1.5191388206083911};
inline constexpr double kSw_skewed20_w = 0.7839572866799435;
inline constexpr double kSw_skewed20_p = 0.000502887676802811;
inline constexpr double kSw_quality16[] = {0.42, 0.51, 0.38, 0.47, 0.55, 0.44, 0.49, 0.36, 0.58, 0.41, 0.46, 0.52, 0.39, 0.48, 0.43, 0.5};
inline constexpr double kSw_quality16_w = 0.9849348498385515;
inline constexpr double kSw_quality16_p = 0.9907856740881159;
inline constexpr double kSw_normalish12[] = {2.3, -0.7, 1.1, 0.4, -1.5, 0.9, -0.2, 1.8, -1.1, 0.1, 0.6, -0.4};
inline constexpr double kSw_normalish12_w = 0.9852303284766771;
inline constexpr double kSw_normalish12_p = 0.996798879165396;
inline constexpr double kSw_ties10[] = {3.0, 5.0, 5.0, 7.0, 7.0, 7.0, 9.0, 9.0, 11.0, 13.0};
inline constexpr double kSw_ties10_w = 0.9662390622608711;
inline constexpr double kSw_ties10_p = 0.8539548329946732;
inline constexpr double kSw_bimodal8[] = {0.05, 0.08, 0.12, 0.15, 0.85, 0.88, 0.91, 0.95};
inline constexpr double kSw_bimodal8_w = 0.747945385294015;
inline constexpr double kSw_bimodal8_p = 0.007751843594068803;
inline constexpr double kSw_tiny3[] = {1.0, 2.5, 3.1};
inline constexpr double kSw_tiny3_w = 0.9423076923076923;
inline constexpr double kSw_tiny3_p = 0.5367371250662004;

// Two-group fixtures: scipy f_oneway, levene(median), levene(mean),
// ttest_ind (equal_var).
inline constexpr double kPair_ramp_vs_const_a[] = {1.0, 2.0, 3.0, 4.0, 5.0};
inline constexpr double kPair_ramp_vs_const_b[] = {3.0, 3.0, 3.0, 3.0, 3.0};
inline constexpr double kPair_ramp_vs_const_anova_f = 0.0;
inline constexpr double kPair_ramp_vs_const_anova_p = 1.0;
inline constexpr double kPair_ramp_vs_const_bf_f = 10.285714285714283;
inline constexpr double kPair_ramp_vs_const_bf_p = 0.012477874755859377;
inline constexpr double kPair_ramp_vs_const_levene_f = 10.285714285714283;
inline constexpr double kPair_ramp_vs_const_levene_p = 0.012477874755859377;
inline constexpr double kPair_ramp_vs_const_t = 0.0;
inline constexpr double kPair_ramp_vs_const_t_p = 1.0;
inline constexpr double kPair_shifted3_a[] = {1.0, 2.0, 3.0};
inline constexpr double kPair_shifted3_b[] = {2.0, 3.0, 4.0};
inline constexpr double kPair_shifted3_anova_f = 1.5;
inline constexpr double kPair_shifted3_anova_p = 0.2878641347266907;
inline constexpr double kPair_shifted3_bf_f = 0.0;
inline constexpr double kPair_shifted3_bf_p = 1.0;
inline constexpr double kPair_shifted3_levene_f = 0.0;
inline constexpr double kPair_shifted3_levene_p = 1.0;
inline constexpr double kPair_shifted3_t = 1.224744871391589;
inline constexpr double kPair_shifted3_t_p = 0.2878641347266908;
inline constexpr double kPair_quality_10_12_a[] = {0.61, 0.55, 0.72, 0.49, 0.68, 0.58, 0.64, 0.52, 0.7, 0.59};
inline constexpr double kPair_quality_10_12_b[] = {0.45, 0.62, 0.31, 0.58, 0.77, 0.4, 0.66, 0.25, 0.71, 0.52, 0.36, 0.6};
inline constexpr double kPair_quality_10_12_anova_f = 2.4356251186888094;
inline constexpr double kPair_quality_10_12_anova_p = 0.13429130508664128;
inline constexpr double kPair_quality_10_12_bf_f = 6.206971647905915;
inline constexpr double kPair_quality_10_12_bf_p = 0.02162777750517104;
inline constexpr double kPair_quality_10_12_levene_f = 7.118487108275093;
inline constexpr double kPair_quality_10_12_levene_p = 0.014773941700701404;
inline constexpr double kPair_quality_10_12_t = -1.560648941526828;
inline constexpr double kPair_quality_10_12_t_p = 0.13429130508664128;
inline constexpr double kPair_tight_vs_spread15_a[] = {0.41, 0.38, 0.45, 0.36, 0.43, 0.4, 0.39, 0.47, 0.35, 0.42, 0.44, 0.37, 0.46, 0.4, 0.41};
inline constexpr double kPair_tight_vs_spread15_b[] = {0.12, 0.78, 0.35, 0.59, 0.22, 0.91, 0.44, 0.67, 0.05, 0.83, 0.29, 0.51, 0.73, 0.18, 0.62};
inline constexpr double kPair_tight_vs_spread15_anova_f = 1.1503000782812909;
inline constexpr double kPair_tight_vs_spread15_anova_p = 0.29264357543826774;
inline constexpr double kPair_tight_vs_spread15_bf_f = 33.136990483944835;
inline constexpr double kPair_tight_vs_spread15_bf_p = 3.5311553748730185e-06;
inline constexpr double kPair_tight_vs_spread15_levene_f = 36.40528501114319;
inline constexpr double kPair_tight_vs_spread15_levene_p = 1.6716168049631457e-06;
inline constexpr double kPair_tight_vs_spread15_t = 1.0725204325705349;
inline constexpr double kPair_tight_vs_spread15_t_p = 0.2926435754382686;
inline constexpr double kPair_ints_8_9_a[] = {12.0, 15.0, 11.0, 18.0, 14.0, 16.0, 13.0, 17.0};
inline constexpr double kPair_ints_8_9_b[] = {22.0, 19.0, 25.0, 21.0, 24.0, 20.0, 23.0, 26.0, 18.0};
inline constexpr double kPair_ints_8_9_anova_f = 35.034602076124585;
inline constexpr double kPair_ints_8_9_anova_p = 2.8171874459294335e-05;
inline constexpr double kPair_ints_8_9_bf_f = 0.12276214833759602;
inline constexpr double kPair_ints_8_9_bf_p = 0.7309294351004525;
inline constexpr double kPair_ints_8_9_levene_f = 0.12276214833759602;
inline constexpr double kPair_ints_8_9_levene_p = 0.7309294351004525;
inline constexpr double kPair_ints_8_9_t = 5.919003469852385;
inline constexpr double kPair_ints_8_9_t_p = 2.8171874459294396e-05;
inline constexpr double kPair_beta_draws_20_18_a[] = {0.406836, 0.394367, 0.478466, 0.464994, 0.345378, 0.283337, 0.492892, 0.453508, 0.417658, 0.409688, 0.385048, 0.358655, 0.508301, 0.37768, 0.244905, 0.373748, 0.348229, 0.448263, 0.484862, 0.394927};
inline constexpr double kPair_beta_draws_20_18_b[] = {0.306317, 0.40115, 0.18398, 0.393158, 0.654986, 0.106282, 0.911052, 0.675917, 0.354251, 0.142114, 0.458561, 0.251361, 0.270078, 0.172107, 0.137105, 0.240556, 0.206802, 0.632151};
inline constexpr double kPair_beta_draws_20_18_anova_f = 0.6476699005697096;
inline constexpr double kPair_beta_draws_20_18_anova_p = 0.42623023134967575;
inline constexpr double kPair_beta_draws_20_18_bf_f = 10.132521898669383;
inline constexpr double kPair_beta_draws_20_18_bf_p = 0.003000104534396391;
inline constexpr double kPair_beta_draws_20_18_levene_f = 16.089799848114144;
inline constexpr double kPair_beta_draws_20_18_levene_p = 0.00029177694926474954;
inline constexpr double kPair_beta_draws_20_18_t = -0.8047794111243822;
inline constexpr double kPair_beta_draws_20_18_t_p = 0.42623023134967686;

// Paired fixtures: scipy ttest_rel(treatment, control).
inline constexpr double kPaired_tiny3p_c[] = {1.0, 2.0, 3.0};
inline constexpr double kPaired_tiny3p_t[] = {2.0, 2.0, 5.0};
inline constexpr double kPaired_tiny3p_stat = 1.7320508075688774;
inline constexpr double kPaired_tiny3p_p = 0.22540333075851657;
inline constexpr double kPaired_quality10p_c[] = {0.52, 0.61, 0.48, 0.7, 0.55, 0.63, 0.47, 0.58, 0.66, 0.51};
inline constexpr double kPaired_quality10p_t[] = {0.55, 0.59, 0.53, 0.72, 0.6, 0.61, 0.5, 0.63, 0.64, 0.57};
inline constexpr double kPaired_quality10p_stat = 2.2736273018003312;
inline constexpr double kPaired_quality10p_p = 0.04907118650717995;
inline constexpr double kPaired_marks12p_c[] = {85.0, 90.0, 78.0, 92.0, 88.0, 76.0, 95.0, 83.0, 89.0, 91.0, 74.0, 87.0};
inline constexpr double kPaired_marks12p_t[] = {82.0, 94.0, 75.0, 96.0, 85.0, 79.0, 93.0, 86.0, 92.0, 95.0, 72.0, 90.0};
inline constexpr double kPaired_marks12p_stat = 1.0091395654645967;
inline constexpr double kPaired_marks12p_p = 0.33459062695909747;
inline constexpr double kPaired_qlty20p_c[] = {0.216832, 0.554343, 0.50883, 0.208496, 0.640845, 0.634371, 0.502836, 0.263343, 0.404198, 0.375991, 0.282563, 0.513827, 0.223189, 0.224205, 0.265494, 0.579648, 0.647086, 0.542904, 0.509223, 0.492208};
inline constexpr double kPaired_qlty20p_t[] = {0.41415, 0.364413, 0.407158, 0.293127, 0.443888, 0.427526, 0.6341, 0.516959, 0.546022, 0.517825, 0.579788, 0.597907, 0.44017, 0.460133, 0.520786, 0.576038, 0.328148, 0.418324, 0.400574, 0.466699};
inline constexpr double kPaired_qlty20p_stat = 0.9159277394762473;
inline constexpr double kPaired_qlty20p_p = 0.37118421595408746;
inline constexpr double kPaired_drop15p_c[] = {10.775852, 7.141754, 7.718111, 11.85005, 13.548898, 10.974857, 11.060141, 11.438685, 11.312719, 9.738254, 10.698396, 8.286094, 8.861501, 7.749485, 9.92904};
inline constexpr double kPaired_drop15p_t[] = {8.974244, 9.873739, 9.328168, 8.841114, 10.769498, 9.263883, 6.263727, 8.311417, 8.600716, 8.749322, 8.548128, 10.436634, 7.101937, 8.469991, 10.514844};
inline constexpr double kPaired_drop15p_stat = -1.9961609915165917;
inline constexpr double kPaired_drop15p_p = 0.06574632326113432;

// ln(Gamma(x)) via mpmath (40 digits, rounded to double).
inline constexpr double kLgammaX[] = {0.5, 1.0, 1.5, 2.0, 3.7, 5.0, 8.25, 12.0, 30.0, 171.6, 500.0, 1000.0, 10000.0, 100000.0, 1000000.0};
inline constexpr double kLgammaY[] = {0.5723649429247001, 0.0, -0.12078223763524522, 0.0, 1.428072326665388, 3.1780538303479458, 9.033186919605123, 17.502307845873887, 71.25703896716801, 709.6573587630563, 2605.115850361734, 5905.220423209181, 82099.71749644238, 1051287.7089736569, 12815504.569147611};

// Regularized incomplete beta I_x(a, b) via mpmath.
inline constexpr double kIbetaA[] = {0.5, 0.5, 2.0, 2.0, 7.5, 10.0, 100.0, 14.0, 0.5, 1.0, 3.0, 250.0};
inline constexpr double kIbetaB[] = {0.5, 5.0, 3.0, 3.0, 2.5, 10.0, 100.0, 0.5, 14.0, 1.0, 1.0, 3.5};
inline constexpr double kIbetaX[] = {0.25, 0.2, 0.3, 0.7, 0.9, 0.5, 0.45, 0.999, 0.001, 0.37, 0.8, 0.99};
inline constexpr double kIbetaY[] = {0.3333333333333333, 0.8550723945959195, 0.3483, 0.9163, 0.8849127329094927, 0.5, 0.07838793271222053, 0.8682462377389758, 0.13175376226102414, 0.37, 0.5120000000000001, 0.6538327034245628};

// Standard normal CDF / quantile via mpmath.
inline constexpr double kNcdfZ[] = {-8.0, -3.0, -1.96, -1.0, -0.5, 0.0, 0.3, 1.0, 2.5757, 6.0};
inline constexpr double kNcdfP[] = {6.220960574271784e-16, 0.0013498980316300946, 0.024997895148220435, 0.15865525393145705, 0.3085375387259869, 0.5, 0.6179114221889527, 0.8413447460685429, 0.9949981299925169, 0.9999999990134123};
inline constexpr double kNquantP[] = {1e-10, 0.001, 0.025, 0.158655, 0.5, 0.841345, 0.975, 0.999999};
inline constexpr double kNquantZ[] = {-6.361340902404057, -3.0902323061678136, -1.9599639845400543, -1.000001049431045, 0.0, 1.000001049431045, 1.9599639845400538, 4.753424308817087};

// Student t CDF via mpmath incomplete beta.
inline constexpr double kTcdfT[] = {-0.276, -0.387, 1.2247, 1.7321, -2.5, 3.2, 0.5, -0.1};
inline constexpr double kTcdfDf[] = {28.0, 19.0, 4.0, 2.0, 7.5, 100.0, 1.0, 3.0};
inline constexpr double kTcdfP[] = {0.3922874855199421, 0.3515283712623173, 0.8560603424071216, 0.887302734413076, 0.019410129136812778, 0.9990790287420585, 0.6475836176504333, 0.4633261744004029};

// F CDF via mpmath incomplete beta.
inline constexpr double kFcdfF[] = {1.5, 10.285714285714286, 3.2, 0.5, 2.7, 0.076176};
inline constexpr double kFcdfD1[] = {1.0, 1.0, 4.0, 10.0, 2.0, 1.0};
inline constexpr double kFcdfD2[] = {4.0, 8.0, 40.0, 10.0, 17.5, 28.0};
inline constexpr double kFcdfP[] = {0.7121358652733093, 0.9875221252441406, 0.9773240889352587, 0.14484580602550423, 0.9049346053319147, 0.21542502896011584};

// Beta(a, b) density via mpmath.
inline constexpr double kBpdfA[] = {2.0, 2.0, 12.0, 12.0, 0.5, 1.0, 5.0};
inline constexpr double kBpdfB[] = {3.0, 3.0, 18.0, 18.0, 0.5, 1.0, 1.0};
inline constexpr double kBpdfX[] = {0.25, 0.5, 0.4, 0.393103448, 0.5, 0.37, 0.9};
inline constexpr double kBpdfY[] = {1.6875, 1.5, 4.421256874970103, 4.4344459254350115, 0.6366197723675814, 1.0, 3.2805000000000004};

// xoshiro256++ (seeded via splitmix64) reference streams.
inline constexpr unsigned long long kXoshiroSeed42U64[] = {15021278609987233951ull, 5881210131331364753ull, 18149643915985481100ull, 12933668939759105464ull, 14637574242682825331ull, 10848501901068131965ull, 2312344417745909078ull, 11162538943635311430ull};
inline constexpr double kXoshiroSeed42Uniform[] = {0.81430514512291, 0.3188210400616612, 0.9838941681774889, 0.7011355981347556, 0.7935044896917292, 0.5880984664675597, 0.12535244206274215, 0.6051224486571727};
inline constexpr unsigned long long kDerivedSeeds[] = {7191089600892374487ull, 10639093021788878346ull, 8330553225316808225ull, 6253910032695137690ull, 11243690016968276331ull, 12568633511918104021ull};

}  // namespace twoarm::testref
