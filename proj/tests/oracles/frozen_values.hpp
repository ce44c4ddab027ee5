// Generated by tests/oracles/generate.py; do not edit.
#pragma once

#include <array>
#include <cstdint>

namespace frozen {

// xoshiro128+ from state {1, 2, 3, 4}.
inline constexpr std::array<std::uint32_t, 10> kXoshiroFrom1234 = {5u, 12295u, 25178119u, 27286542u, 39879690u, 1140358681u, 3276312097u, 4110231701u, 399823256u, 2144435200u};
// stream_seed(7, 0), stream_seed(7, 1), stream_seed(12345, 2^40).
inline constexpr std::array<std::uint64_t, 3> kStreamSeeds = {11984929618412882174ull, 17857607588867943279ull, 15952081705291367265ull};
// First 24-bit draws of the xoshiro stream seeded with stream_seed(7, 0).
inline constexpr std::array<std::uint32_t, 4> kSeededXoshiro24 = {14880781u, 4324888u, 8389577u, 14698496u};
// LFSR32 (taps 32, 22, 2, 1) from register 1, 24 shifts per draw.
inline constexpr std::array<std::uint32_t, 6> kLfsrFrom1 = {2995931u, 649098u, 3838105u, 4510393u, 33415u, 1805463u};
inline constexpr bool kLfsrPolynomialPrimitive = true;

inline constexpr double kJPerpBeta20N250Gx1 = 0.0631964699396379;
inline constexpr std::uint32_t kLutEntryZeroS0Twelfth = 15435784u;

// N = 3: W01 = 0.5, W02 = -1, W12 = 0.25, h = (0.1, -0.2, 0.3), beta = 0.7.
inline constexpr std::array<double, 8> kThreeSpinTable = {0.06818247631705375, 0.15793563653598217, 0.018032714604974482, 0.1693872622964332, 0.2965416220028082, 0.04177038461268098, 0.15793563653598217, 0.09021426709408505};
inline constexpr double kThreeSpinFreeEnergy = -3.3865252752094523;
// Stationary law of the autonomous chain on the same instance at s0 = 1/2.
inline constexpr std::array<double, 8> kThreeSpinAutonomousS0Half = {0.10371945109425085, 0.1171427308576847, 0.09178753375437201, 0.11604168293329455, 0.1916705398124207, 0.13556455028539768, 0.13543391592187495, 0.10863959534070446};
// 3 sites x 3 replicas, J = 1, gx = 0.5, gz = 0.2, beta = 0.744: autonomous chain at
// s0 = 1/4, and its distance to the Boltzmann law of the same lattice.
inline constexpr std::array<double, 512> kReplicaLatticeAutonomousQuarter = {0.18048166958425504, 0.005072960778168069, 0.005072960778168046, 0.00015254928604355406, 0.005072960778168047, 0.00015254928604359195, 0.00015254928604352974, 5.417061460927236e-06, 0.005072960778168044, 0.0010236836550491168, 0.00017025546454270925, 4.858952145480513e-05, 0.0001702554645427094, 4.8589521454805176e-05, 6.473951238723729e-06, 2.9128967423832544e-06, 0.005072960778168066, 0.00017025546454271025, 0.0010236836550491424, 4.858952145480591e-05, 0.000170255464542709, 6.4739512387244585e-06, 4.8589521454806145e-05, 2.912896742383314e-06, 0.0001525492860435605, 4.8589521454804214e-05, 4.858952145480601e-05, 3.451377087987825e-05, 6.473951238723246e-06, 3.110387760804502e-06, 3.1103877608046144e-06, 3.548582433972596e-06, 0.005072960778168056, 0.00017025546454270816, 0.00017025546454271, 6.473951238724147e-06, 0.0010236836550491294, 4.858952145480535e-05, 4.858952145480568e-05, 2.9128967423832645e-06, 0.0001525492860435597, 4.858952145480437e-05, 6.473951238723351e-06, 3.1103877608044174e-06, 4.858952145480469e-05, 3.451377087987819e-05, 3.1103877608044513e-06, 3.548582433972597e-06, 0.00015254928604356173, 6.473951238722603e-06, 4.858952145480521e-05, 3.110387760804524e-06, 4.8589521454804783e-05, 3.1103877608044276e-06, 3.451377087987902e-05, 3.5485824339726305e-06, 5.4170614609307754e-06, 2.9128967423832857e-06, 2.9128967423833696e-06, 3.548582433972584e-06, 2.9128967423832226e-06, 3.5485824339726284e-06, 3.548582433972606e-06, 9.650558701752852e-06, 0.005072960778168053, 0.0010236836550491218, 0.00017025546454270965, 4.858952145480532e-05, 0.00017025546454270797, 4.8589521454804736e-05, 6.47395123872469e-06, 2.912896742383187e-06, 0.0010236836550491148, 0.007952615333932867, 5.3519529094587316e-05, 0.0004817158616299026, 5.351952909458655e-05, 0.0004817158616299039, 3.2172553611404553e-06, 3.5007648603202904e-05, 0.00017025546454271017, 5.35195290945854e-05, 5.351952909458836e-05, 3.8422710723559946e-05, 6.752609108404452e-06, 3.2253334238829824e-06, 3.22533342388301e-06, 3.8137032897579136e-06, 4.858952145480541e-05, 0.0004817158616299025, 3.842271072356087e-05, 0.0005823603031352788, 3.2253334238830162e-06, 3.9055934002221875e-05, 3.965516744875268e-06, 7.30778121970297e-05, 0.00017025546454270854, 5.3519529094588624e-05, 6.752609108403619e-06, 3.2253334238829824e-06, 5.351952909458645e-05, 3.842271072356037e-05, 3.2253334238830107e-06, 3.8137032897579488e-06, 4.858952145480612e-05, 0.00048171586162990454, 3.2253334238830218e-06, 3.905593400222195e-05, 3.842271072356035e-05, 0.0005823603031352871, 3.9655167448753376e-06, 7.307781219703027e-05, 6.473951238724234e-06, 3.217255361140327e-06, 3.225333423882993e-06, 3.96551674487532e-06, 3.2253334238829396e-06, 3.965516744875361e-06, 4.0176622192158426e-06, 1.1790115005106103e-05, 2.912896742383288e-06, 3.500764860320306e-05, 3.8137032897579094e-06, 7.307781219702957e-05, 3.8137032897580106e-06, 7.307781219703031e-05, 1.1790115005106098e-05, 0.00033199623640057477, 0.005072960778168068, 0.00017025546454271025, 0.0010236836550491385, 4.858952145480652e-05, 0.00017025546454271052, 6.47395123872388e-06, 4.8589521454805996e-05, 2.9128967423832044e-06, 0.00017025546454270933, 5.3519529094587425e-05, 5.351952909458791e-05, 3.8422710723559756e-05, 6.752609108404149e-06, 3.2253334238830696e-06, 3.2253334238830192e-06, 3.8137032897579433e-06, 0.001023683655049149, 5.351952909458702e-05, 0.007952615333932992, 0.00048171586162990893, 5.351952909458713e-05, 3.2172553611404722e-06, 0.00048171586162991126, 3.5007648603203466e-05, 4.8589521454805115e-05, 3.8422710723559526e-05, 0.0004817158616299085, 0.0005823603031352811, 3.2253334238831247e-06, 3.965516744875255e-06, 3.9055934002222404e-05, 7.30778121970298e-05, 0.00017025546454270982, 6.7526091084048885e-06, 5.351952909458639e-05, 3.225333423883122e-06, 5.351952909458767e-05, 3.2253334238830726e-06, 3.842271072356144e-05, 3.813703289758085e-06, 6.473951238723565e-06, 3.2253334238829587e-06, 3.217255361140502e-06, 3.965516744875337e-06, 3.225333423883076e-06, 4.017662219215755e-06, 3.9655167448753824e-06, 1.179011500510608e-05, 4.858952145480585e-05, 3.2253334238830895e-06, 0.00048171586162991224, 3.9055934002222485e-05, 3.8422710723560515e-05, 3.965516744875484e-06, 0.0005823603031352984, 7.307781219703165e-05, 2.9128967423833005e-06, 3.813703289757968e-06, 3.5007648603203344e-05, 7.307781219702969e-05, 3.813703289758055e-06, 1.1790115005106103e-05, 7.307781219703165e-05, 0.000331996236400575, 0.00015254928604356132, 4.8589521454804926e-05, 4.8589521454806586e-05, 3.4513770879878275e-05, 6.4739512387233235e-06, 3.110387760804375e-06, 3.110387760804538e-06, 3.548582433972592e-06, 4.858952145480452e-05, 0.00048171586162990194, 3.842271072356059e-05, 0.0005823603031352804, 3.2253334238831005e-06, 3.9055934002221774e-05, 3.965516744875324e-06, 7.307781219702985e-05, 4.858952145480597e-05, 3.842271072355929e-05, 0.00048171586162990676, 0.0005823603031352769, 3.2253334238830633e-06, 3.965516744875261e-06, 3.905593400222235e-05, 7.307781219703e-05, 3.451377087987811e-05, 0.0005823603031352781, 0.0005823603031352794, 0.011478492481018192, 4.017662219215758e-06, 8.114632928104538e-05, 8.11463292810452e-05, 0.0018514250545459356, 6.473951238722634e-06, 3.2253334238830133e-06, 3.2253334238830095e-06, 4.017662219215797e-06, 3.2172553611404362e-06, 3.965516744875373e-06, 3.965516744875362e-06, 1.1790115005106116e-05, 3.1103877608043433e-06, 3.90559340022219e-05, 3.965516744875386e-06, 8.114632928104502e-05, 3.965516744875366e-06, 8.114632928104576e-05, 1.236003959011853e-05, 0.0003709423664254592, 3.1103877608045076e-06, 3.965516744875317e-06, 3.9055934002222445e-05, 8.114632928104544e-05, 3.965516744875365e-06, 1.2360039590118524e-05, 8.114632928104706e-05, 0.0003709423664254595, 3.5485824339726233e-06, 7.307781219702985e-05, 7.307781219702988e-05, 0.0018514250545459301, 1.1790115005106132e-05, 0.0003709423664254591, 0.0003709423664254596, 0.012939361549687643, 0.005072960778168062, 0.0001702554645427088, 0.00017025546454270963, 6.473951238723249e-06, 0.0010236836550491287, 4.858952145480583e-05, 4.858952145480525e-05, 2.9128967423832243e-06, 0.00017025546454270933, 5.351952909458656e-05, 6.752609108404063e-06, 3.225333423883036e-06, 5.351952909458662e-05, 3.842271072356054e-05, 3.225333423883096e-06, 3.813703289757857e-06, 0.00017025546454271039, 6.75260910840469e-06, 5.3519529094587974e-05, 3.225333423882993e-06, 5.351952909458856e-05, 3.2253334238830573e-06, 3.842271072356146e-05, 3.8137032897580953e-06, 6.4739512387231685e-06, 3.225333423883026e-06, 3.2253334238830353e-06, 4.017662219215736e-06, 3.217255361140378e-06, 3.965516744875379e-06, 3.965516744875361e-06, 1.1790115005106132e-05, 0.0010236836550491157, 5.3519529094586666e-05, 5.351952909458708e-05, 3.2172553611405527e-06, 0.007952615333932801, 0.00048171586162990053, 0.00048171586162990205, 3.500764860320312e-05, 4.8589521454805685e-05, 3.8422710723560434e-05, 3.2253334238828964e-06, 3.965516744875321e-06, 0.00048171586162990194, 0.0005823603031352836, 3.905593400222197e-05, 7.307781219703024e-05, 4.858952145480575e-05, 3.225333423882933e-06, 3.842271072356109e-05, 3.965516744875479e-06, 0.00048171586162990205, 3.9055934002222e-05, 0.0005823603031352983, 7.307781219703149e-05, 2.9128967423832823e-06, 3.813703289758025e-06, 3.813703289758098e-06, 1.1790115005106103e-05, 3.500764860320314e-05, 7.307781219703027e-05, 7.307781219703148e-05, 0.0003319962364005751, 0.00015254928604356086, 4.858952145480511e-05, 6.473951238723692e-06, 3.110387760804503e-06, 4.85895214548046e-05, 3.451377087987755e-05, 3.110387760804398e-06, 3.548582433972598e-06, 4.8589521454805176e-05, 0.00048171586162990487, 3.2253334238829726e-06, 3.905593400222184e-05, 3.8422710723559506e-05, 0.0005823603031352864, 3.965516744875346e-06, 7.307781219703054e-05, 6.47395123872339e-06, 3.225333423883011e-06, 3.217255361140409e-06, 3.965516744875295e-06, 3.225333423883043e-06, 4.017662219215795e-06, 3.965516744875379e-06, 1.179011500510614e-05, 3.11038776080448e-06, 3.905593400222184e-05, 3.965516744875333e-06, 8.114632928104497e-05, 3.965516744875367e-06, 8.114632928104587e-05, 1.2360039590118514e-05, 0.00037094236642545907, 4.8589521454805204e-05, 3.8422710723560136e-05, 3.2253334238829836e-06, 3.965516744875334e-06, 0.00048171586162990183, 0.0005823603031352836, 3.905593400222202e-05, 7.30778121970305e-05, 3.451377087987887e-05, 0.0005823603031352844, 4.0176622192158045e-06, 8.114632928104605e-05, 0.0005823603031352843, 0.011478492481018392, 8.114632928104594e-05, 0.0018514250545459486, 3.110387760804424e-06, 3.965516744875384e-06, 3.96551674487532e-06, 1.2360039590118508e-05, 3.905593400222199e-05, 8.114632928104607e-05, 8.114632928104722e-05, 0.0003709423664254597, 3.5485824339727148e-06, 7.307781219703049e-05, 1.179011500510615e-05, 0.0003709423664254592, 7.307781219703049e-05, 0.0018514250545459546, 0.00037094236642545966, 0.012939361549687648, 0.0001525492860435615, 6.473951238722904e-06, 4.858952145480576e-05, 3.1103877608045068e-06, 4.858952145480416e-05, 3.1103877608044513e-06, 3.4513770879878824e-05, 3.5485824339726495e-06, 6.473951238723459e-06, 3.217255361140433e-06, 3.2253334238830637e-06, 3.965516744875346e-06, 3.2253334238830328e-06, 3.965516744875277e-06, 4.017662219215895e-06, 1.1790115005106138e-05, 4.858952145480616e-05, 3.225333423883128e-06, 0.0004817158616299132, 3.905593400222242e-05, 3.8422710723561146e-05, 3.965516744875343e-06, 0.0005823603031352992, 7.307781219703176e-05, 3.1103877608044687e-06, 3.965516744875285e-06, 3.905593400222228e-05, 8.114632928104529e-05, 3.965516744875439e-06, 1.2360039590118527e-05, 8.114632928104727e-05, 0.0003709423664254595, 4.858952145480433e-05, 3.2253334238829608e-06, 3.842271072356177e-05, 3.965516744875406e-06, 0.00048171586162990346, 3.9055934002221963e-05, 0.0005823603031352974, 7.30778121970317e-05, 3.1103877608043984e-06, 3.965516744875381e-06, 3.965516744875452e-06, 1.236003959011852e-05, 3.905593400222199e-05, 8.114632928104586e-05, 8.114632928104722e-05, 0.0003709423664254597, 3.4513770879880024e-05, 4.01766221921589e-06, 0.0005823603031352985, 8.114632928104733e-05, 0.0005823603031352988, 8.114632928104708e-05, 0.011478492481018765, 0.0018514250545459796, 3.5485824339726855e-06, 1.1790115005106157e-05, 7.307781219703164e-05, 0.0003709423664254593, 7.307781219703145e-05, 0.00037094236642545977, 0.001851425054545986, 0.012939361549687658, 5.417061460931259e-06, 2.912896742383242e-06, 2.9128967423832586e-06, 3.5485824339725902e-06, 2.91289674238329e-06, 3.548582433972584e-06, 3.548582433972658e-06, 9.650558701752984e-06, 2.912896742383299e-06, 3.500764860320303e-05, 3.81370328975788e-06, 7.307781219702993e-05, 3.8137032897579996e-06, 7.307781219703038e-05, 1.1790115005106191e-05, 0.0003319962364005771, 2.912896742383358e-06, 3.8137032897580165e-06, 3.5007648603203466e-05, 7.307781219703005e-05, 3.8137032897580458e-06, 1.1790115005106166e-05, 7.307781219703164e-05, 0.0003319962364005775, 3.5485824339726165e-06, 7.307781219702966e-05, 7.307781219703008e-05, 0.0018514250545459284, 1.1790115005106194e-05, 0.00037094236642546015, 0.00037094236642546053, 0.012939361549687695, 2.9128967423832197e-06, 3.8137032897580267e-06, 3.8137032897580305e-06, 1.17901150051062e-05, 3.500764860320298e-05, 7.307781219703047e-05, 7.307781219703146e-05, 0.0003319962364005778, 3.548582433972623e-06, 7.307781219703054e-05, 1.1790115005106184e-05, 0.0003709423664254602, 7.307781219703061e-05, 0.0018514250545459505, 0.000370942366425461, 0.012939361549687707, 3.548582433972647e-06, 1.1790115005106186e-05, 7.307781219703188e-05, 0.0003709423664254607, 7.307781219703164e-05, 0.0003709423664254609, 0.001851425054545982, 0.012939361549687715, 9.650558701753003e-06, 0.00033199623640057705, 0.00033199623640057754, 0.012939361549687691, 0.0003319962364005778, 0.0129393615496877, 0.012939361549687712, 0.5301044110925451};
inline constexpr double kReplicaLatticeAutonomousBias = 0.08568400532628669;

// Two-site chain: J = 1, gx = 0.7, gz = 0.3, beta = 2.
inline constexpr double kTwoSiteMz = 0.7565811921572294;
inline constexpr std::array<double, 2> kTwoSiteCorr = {0.9999999999999999, 0.8966352850475899};
inline constexpr std::array<double, 4> kTwoSiteDiag = {0.09586822518328274, 0.02584117873810249, 0.025841178738102513, 0.8524494173405122};
// Four-site chain: J = 1.5, gx = 0.8, gz = 0.2, beta = 1.3.
inline constexpr double kFourSiteMz = 0.7343790516747739;
inline constexpr std::array<double, 4> kFourSiteCorr = {1.0, 0.9297207230780141, 0.9257306624320929, 0.9297207230780141};

// Eight-site chain, J = 2, gz = 1, beta = 20, gx = r J for r in {0.05, 0.25, 0.5, 0.75, 1}.
inline constexpr std::array<double, 5> kMagnetizationGrid = {0.9997999355510482, 0.994959656671415, 0.9793523917472667, 0.951723131968647, 0.9098000117954268};
// Same grid on the 250-replica classical lattice (transfer matrix).
inline constexpr std::array<double, 5> kReplicaMagnetizationGrid = {0.9998102707622261, 0.995218916402883, 0.9804024491754065, 0.9541504368789662, 0.9143335573923834};

// Ten-site chain, J = 1, gx = 0.5, gz = 0, beta = 0.744.
inline constexpr std::array<double, 10> kTenSiteCorr = {1.0, 0.6027668659840435, 0.3820426769564833, 0.25424080160199564, 0.1881750506017804, 0.16780212662341104, 0.18817505060178047, 0.25424080160199547, 0.3820426769564832, 0.6027668659840435};
// Same chain on the 10-replica classical lattice (transfer matrix).
inline constexpr std::array<double, 10> kTenSiteReplicaCorr = {0.9999999999999999, 0.6032770081601015, 0.38250104850181066, 0.2546464617874196, 0.18854094002130245, 0.1681536362878649, 0.1885409400213029, 0.2546464617874199, 0.38250104850181077, 0.603277008160102};
// Four sites, 6 replicas, J = 1, gx = 0.9, gz = 0.4, beta = 1.5 (transfer matrix).
inline constexpr double kSmallReplicaMz = 0.8989068319460907;
inline constexpr std::array<double, 4> kSmallReplicaCorr = {1.0000000000000002, 0.8658892364146527, 0.853718022685078, 0.8658892364146528};

}  // namespace frozen

