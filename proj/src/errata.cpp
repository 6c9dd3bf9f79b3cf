#include "kempner/moebius.hpp"

namespace kempner {

// Discrepancy list between the chain classifier and the inversion sum,
// n <= 10000, s1 = 0; certified against audit_s_closed.
const std::vector<ErrataRecord>& recorded_errata() {
  static const std::vector<ErrataRecord> records = {
      {12, -3, -1}, {36, -2, -1}, {45, -5, -2}, {60, 3, 1}, {80, -5, -1},
      {84, 3, 1}, {90, 2, 0}, {132, 3, 1}, {156, 3, 1}, {175, -7, -2},
      {180, 2, 1}, {189, -7, -1}, {204, 3, 1}, {224, -7, -1}, {225, -3, -1},
      {228, 3, 1}, {240, 3, 0}, {252, 2, 1}, {276, 3, 1}, {315, 5, 2},
      {348, 3, 1}, {350, 2, 0}, {372, 3, 1}, {378, 2, 0}, {396, 2, 1},
      {400, -2, -1}, {420, -3, -1}, {444, 3, 1}, {468, 2, 1}, {492, 3, 1},
      {495, 5, 2}, {516, 3, 1}, {525, 3, 0}, {539, -11, -4}, {560, 5, 1},
      {564, 3, 1}, {585, 5, 2}, {612, 2, 1}, {630, -2, 0}, {636, 3, 1},
      {637, -13, -6}, {660, -3, -1}, {672, 3, 0}, {684, 2, 1}, {700, 2, 0},
      {708, 3, 1}, {720, 5, 1}, {732, 3, 1}, {756, 2, 0}, {765, 5, 2},
      {780, -3, -1}, {804, 3, 1}, {828, 2, 1}, {852, 3, 1}, {855, 5, 2},
      {876, 3, 1}, {880, 5, 1}, {900, 2, 0}, {924, -3, -1}, {945, 5, 0},
      {948, 3, 1}, {990, -2, 0}, {996, 3, 1}, {1020, -3, -1}, {1035, 5, 2},
      {1040, 5, 1}, {1044, 2, 1}, {1050, -2, 0}, {1068, 3, 1}, {1078, 2, 0},
      {1092, -3, -1}, {1116, 2, 1}, {1120, 5, 0}, {1140, -3, -1},
      {1164, 3, 1}, {1170, -2, 0}, {1212, 3, 1}, {1225, -5, -3}, {1236, 3, 1},
      {1260, -2, -1}, {1274, 2, 0}, {1284, 3, 1}, {1305, 5, 2}, {1308, 3, 1},
      {1323, -3, -2}, {1332, 2, 1}, {1356, 3, 1}, {1360, 5, 1},
      {1375, -11, -1}, {1380, -3, -1}, {1395, 5, 2}, {1428, -3, -1},
      {1476, 2, 1}, {1520, 5, 1}, {1524, 3, 1}, {1530, -2, 0}, {1548, 2, 1},
      {1568, -2, -1}, {1572, 3, 1}, {1573, -13, -2}, {1575, 3, 1},
      {1596, -3, -1}, {1617, 3, 0}, {1625, -13, -3}, {1644, 3, 1},
      {1665, 5, 2}, {1668, 3, 1}, {1680, -3, 0}, {1692, 2, 1}, {1710, -2, 0},
      {1716, -3, -1}, {1740, -3, -1}, {1788, 3, 1}, {1812, 3, 1},
      {1840, 5, 1}, {1845, 5, 2}, {1860, -3, -1}, {1884, 3, 1}, {1890, -2, 0},
      {1908, 2, 1}, {1911, 3, 0}, {1925, 7, 2}, {1932, -3, -1}, {1935, 5, 2},
      {1956, 3, 1}, {1980, -2, -1}, {2004, 3, 1}, {2016, 3, 0},
      {2057, -17, -6}, {2070, -2, 0}, {2076, 3, 1}, {2079, 7, 1},
      {2100, -3, 0}, {2115, 5, 2}, {2124, 2, 1}, {2148, 3, 1}, {2156, 2, 0},
      {2172, 3, 1}, {2196, 2, 1}, {2220, -3, -1}, {2244, -3, -1},
      {2275, 7, 2}, {2292, 3, 1}, {2299, -19, -8}, {2316, 3, 1}, {2320, 5, 1},
      {2340, -2, -1}, {2364, 3, 1}, {2385, 5, 2}, {2388, 3, 1}, {2412, 2, 1},
      {2436, -3, -1}, {2457, 7, 1}, {2460, -3, -1}, {2464, 7, 1},
      {2475, 3, 1}, {2480, 5, 1}, {2508, -3, -1}, {2532, 3, 1}, {2548, 2, 0},
      {2556, 2, 1}, {2580, -3, -1}, {2604, -3, -1}, {2610, -2, 0},
      {2628, 2, 1}, {2640, -3, 0}, {2652, -3, -1}, {2655, 5, 2},
      {2673, -11, -2}, {2676, 3, 1}, {2695, 5, 0}, {2724, 3, 1}, {2745, 5, 2},
      {2748, 3, 1}, {2750, 2, 0}, {2772, -2, -1}, {2790, -2, 0}, {2796, 3, 1},
      {2800, 2, 1}, {2820, -3, -1}, {2844, 2, 1}, {2868, 3, 1},
      {2873, -17, -4}, {2892, 3, 1}, {2912, 7, 1}, {2925, 3, 1}, {2960, 5, 1},
      {2964, -3, -1}, {2975, 7, 2}, {2988, 2, 1}, {3012, 3, 1}, {3015, 5, 2},
      {3024, 2, 0}, {3036, -3, -1}, {3060, -2, -1}, {3084, 3, 1},
      {3108, -3, -1}, {3120, -3, 0}, {3146, 2, 0}, {3156, 3, 1},
      {3180, -3, -1}, {3185, 5, 0}, {3195, 5, 2}, {3204, 2, 1},
      {3211, -19, -6}, {3213, 7, 1}, {3228, 3, 1}, {3234, -2, 0},
      {3250, 2, 0}, {3252, 3, 1}, {3276, -2, -1}, {3280, 5, 1}, {3285, 5, 2},
      {3324, 3, 1}, {3325, 7, 2}, {3330, -2, 0}, {3360, -3, 0}, {3372, 3, 1},
      {3396, 3, 1}, {3420, -2, -1}, {3440, 5, 1}, {3444, -3, -1},
      {3465, -5, -2}, {3492, 2, 1}, {3516, 3, 1}, {3540, -3, -1},
      {3555, 5, 2}, {3588, -3, -1}, {3591, 7, 1}, {3600, 2, 1},
      {3612, -3, -1}, {3636, 2, 1}, {3660, -3, -1}, {3684, 3, 1},
      {3690, -2, 0}, {3708, 2, 1}, {3732, 3, 1}, {3735, 5, 2}, {3756, 3, 1},
      {3760, 5, 1}, {3780, -2, 0}, {3804, 3, 1}, {3808, 7, 1}, {3822, -2, 0},
      {3825, 3, 1}, {3828, -3, -1}, {3850, -2, 0}, {3852, 2, 1},
      {3870, -2, 0}, {3876, -3, -1}, {3887, -23, -10}, {3924, 2, 1},
      {3948, -3, -1}, {3972, 3, 1}, {4005, 5, 2}, {4020, -3, -1},
      {4025, 7, 2}, {4044, 3, 1}, {4068, 2, 1}, {4080, -3, 0}, {4092, -3, -1},
      {4095, -5, -2}, {4114, 2, 0}, {4125, 3, 0}, {4140, -2, -1},
      {4158, -2, 0}, {4164, 3, 1}, {4188, 3, 1}, {4230, -2, 0}, {4236, 3, 1},
      {4240, 5, 1}, {4256, 7, 1}, {4260, -3, -1}, {4275, 3, 1},
      {4284, -2, -1}, {4308, 3, 1}, {4347, 7, 1}, {4365, 5, 2},
      {4380, -3, -1}, {4400, 2, 1}, {4404, 3, 1}, {4452, -3, -1},
      {4476, 3, 1}, {4524, -3, -1}, {4545, 5, 2}, {4548, 3, 1}, {4550, -2, 0},
      {4560, -3, 0}, {4572, 2, 1}, {4596, 3, 1}, {4598, 2, 0}, {4620, 3, 1},
      {4635, 5, 2}, {4668, 3, 1}, {4692, -3, -1}, {4716, 2, 1}, {4719, 3, 0},
      {4720, 5, 1}, {4725, 7, 1}, {4740, -3, -1}, {4764, 3, 1}, {4770, -2, 0},
      {4788, -2, -1}, {4812, 3, 1}, {4815, 5, 2}, {4836, -3, -1},
      {4851, 3, 0}, {4875, 3, 0}, {4880, 5, 1}, {4884, -3, -1}, {4905, 5, 2},
      {4908, 3, 1}, {4914, -2, 0}, {4932, 2, 1}, {4956, -3, -1},
      {4980, -3, -1}, {5004, 2, 1}, {5028, 3, 1}, {5040, -5, -1},
      {5052, 3, 1}, {5075, 7, 2}, {5085, 5, 2}, {5124, -3, -1},
      {5148, -2, -1}, {5152, 7, 1}, {5172, 3, 1}, {5175, 3, 1}, {5196, 3, 1},
      {5200, 2, 1}, {5220, -2, -1}, {5244, -3, -1}, {5268, 3, 1},
      {5310, -2, 0}, {5316, 3, 1}, {5340, -3, -1}, {5346, 2, 0},
      {5355, -5, -2}, {5360, 5, 1}, {5364, 2, 1}, {5388, 3, 1}, {5390, -2, 0},
      {5412, -3, -1}, {5425, 7, 2}, {5436, 2, 1}, {5460, 3, 1}, {5481, 7, 1},
      {5484, 3, 1}, {5490, -2, 0}, {5491, -19, -2}, {5500, 2, 0},
      {5520, -3, 0}, {5532, 3, 1}, {5556, 3, 1}, {5580, -2, -1}, {5600, 7, 1},
      {5604, 3, 1}, {5628, -3, -1}, {5632, -11, -1}, {5652, 2, 1},
      {5676, -3, -1}, {5680, 5, 1}, {5715, 5, 2}, {5733, 3, 0}, {5746, 2, 0},
      {5748, 3, 1}, {5772, -3, -1}, {5775, -3, 0}, {5796, -2, -1},
      {5820, -3, -1}, {5831, -17, -3}, {5840, 5, 1}, {5844, 3, 1},
      {5859, 7, 1}, {5868, 2, 1}, {5892, 3, 1}, {5895, 5, 2}, {5916, -3, -1},
      {5929, -7, -3}, {5950, -2, 0}, {5964, -3, -1}, {5985, -5, -2},
      {5988, 3, 1}, {6012, 2, 1}, {6030, -2, 0}, {6036, 3, 1}, {6048, 7, 1},
      {6060, -3, -1}, {6075, -5, -1}, {6108, 3, 1}, {6125, -7, -4},
      {6132, -3, -1}, {6160, -5, -1}, {6165, 5, 2}, {6171, 3, 0},
      {6180, -3, -1}, {6204, -3, -1}, {6228, 2, 1}, {6252, 3, 1},
      {6255, 5, 2}, {6276, 3, 1}, {6292, 2, 0}, {6300, -2, 0}, {6320, 5, 1},
      {6324, -3, -1}, {6370, -2, 0}, {6390, -2, 0}, {6396, -3, -1},
      {6420, -3, -1}, {6422, 2, 0}, {6426, -2, 0}, {6435, -5, -2},
      {6444, 2, 1}, {6468, -3, 0}, {6475, 7, 2}, {6492, 3, 1}, {6496, 7, 1},
      {6500, 2, 0}, {6516, 2, 1}, {6517, -19, -5}, {6525, 3, 1},
      {6540, -3, -1}, {6564, 3, 1}, {6570, -2, 0}, {6612, -3, -1},
      {6636, -3, -1}, {6640, 5, 1}, {6647, -23, -6}, {6650, -2, 0},
      {6660, -2, -1}, {6684, 3, 1}, {6705, 5, 2}, {6708, -3, -1},
      {6732, -2, -1}, {6756, 3, 1}, {6780, -3, -1}, {6795, 5, 2},
      {6800, 2, 1}, {6825, -3, 0}, {6828, 3, 1}, {6852, 3, 1}, {6876, 2, 1},
      {6897, 3, 0}, {6912, -3, -1}, {6924, 3, 1}, {6930, 2, 0}, {6944, 7, 1},
      {6948, 2, 1}, {6960, -3, 0}, {6972, -3, -1}, {6975, 3, 1}, {6993, 7, 1},
      {6996, -3, -1}, {7007, 11, 4}, {7044, 3, 1}, {7065, 5, 2},
      {7068, -3, -1}, {7092, 2, 1}, {7110, -2, 0}, {7116, 3, 1}, {7120, 5, 1},
      {7140, 3, 1}, {7164, 2, 1}, {7175, 7, 2}, {7182, -2, 0}, {7188, 3, 1},
      {7212, 3, 1}, {7245, -5, -2}, {7280, -5, -1}, {7284, 3, 1},
      {7308, -2, -1}, {7332, -3, -1}, {7335, 5, 2}, {7356, 3, 1},
      {7380, -2, -1}, {7392, -3, 0}, {7404, 3, 1}, {7428, 3, 1},
      {7440, -3, 0}, {7470, -2, 0}, {7476, -3, -1}, {7515, 5, 2},
      {7524, -2, -1}, {7525, 7, 2}, {7548, -3, -1}, {7572, 3, 1},
      {7596, 2, 1}, {7600, 2, 1}, {7620, -3, -1}, {7644, -3, 0}, {7692, 3, 1},
      {7700, -2, 0}, {7716, 3, 1}, {7740, -2, -1}, {7749, 7, 1}, {7760, 5, 1},
      {7764, 3, 1}, {7774, 2, 0}, {7785, 5, 2}, {7788, -3, -1},
      {7812, -2, -1}, {7836, 3, 1}, {7860, -3, -1}, {7865, 5, 0},
      {7908, 3, 1}, {7920, -5, -1}, {7932, 3, 1}, {7956, -2, -1},
      {7980, 3, 1}, {8004, -3, -1}, {8010, -2, 0}, {8028, 2, 1},
      {8050, -2, 0}, {8052, -3, -1}, {8055, 5, 2}, {8076, 3, 1}, {8080, 5, 1},
      {8085, -3, 0}, {8124, 3, 1}, {8127, 7, 1}, {8145, 5, 2}, {8148, -3, -1},
      {8172, 2, 1}, {8190, 2, 0}, {8196, 3, 1}, {8220, -3, -1}, {8225, 7, 2},
      {8228, 2, 0}, {8240, 5, 1}, {8244, 2, 1}, {8250, -2, 0}, {8268, -3, -1},
      {8281, -7, -1}, {8288, 7, 1}, {8292, 3, 1}, {8303, -23, -4},
      {8316, -2, 0}, {8325, 3, 1}, {8340, -3, -1}, {8364, -3, -1},
      {8381, -29, -12}, {8388, 2, 1}, {8412, 3, 1}, {8415, -5, -2},
      {8436, -3, -1}, {8460, -2, -1}, {8484, -3, -1}, {8508, 3, 1},
      {8556, -3, -1}, {8560, 5, 1}, {8580, 3, 1}, {8595, 5, 2}, {8604, 2, 1},
      {8619, 3, 0}, {8624, 2, 0}, {8628, 3, 1}, {8652, -3, -1}, {8676, 2, 1},
      {8685, 5, 2}, {8694, -2, 0}, {8720, 5, 1}, {8724, 3, 1}, {8730, -2, 0},
      {8736, -3, 0}, {8772, -3, -1}, {8796, 3, 1}, {8844, -3, -1},
      {8865, 5, 2}, {8868, 3, 1}, {8880, -3, 0}, {8883, 7, 1}, {8892, -2, -1},
      {8916, 3, 1}, {8925, -3, 0}, {8940, -3, -1}, {8955, 5, 2},
      {8959, -31, -14}, {8988, -3, -1}, {9012, 3, 1}, {9036, 2, 1},
      {9040, 5, 1}, {9060, -3, -1}, {9084, 3, 1}, {9090, -2, 0},
      {9100, -2, 0}, {9108, -2, -1}, {9132, 3, 1}, {9135, -5, -2},
      {9156, -3, -1}, {9163, 11, 4}, {9184, 7, 1}, {9196, 2, 0}, {9200, 2, 1},
      {9204, -3, -1}, {9225, 3, 1}, {9228, 3, 1}, {9252, 2, 1}, {9270, -2, 0},
      {9275, 7, 2}, {9276, 3, 1}, {9324, -2, -1}, {9348, -3, -1},
      {9360, -5, -1}, {9372, -3, -1}, {9405, -5, -2}, {9420, -3, -1},
      {9438, -2, 0}, {9444, 3, 1}, {9450, -2, 0}, {9468, 2, 1},
      {9477, -13, -1}, {9492, -3, -1}, {9495, 5, 2}, {9516, -3, -1},
      {9520, -5, -1}, {9540, -2, -1}, {9555, -3, 0}, {9564, 3, 1},
      {9588, -3, -1}, {9625, 7, 0}, {9630, -2, 0}, {9632, 7, 1}, {9633, 3, 0},
      {9636, -3, -1}, {9660, 3, 1}, {9675, 3, 1}, {9684, 2, 1}, {9708, 3, 1},
      {9732, 3, 1}, {9750, -2, 0}, {9756, 2, 1}, {9765, -5, -2},
      {9780, -3, -1}, {9804, -3, -1}, {9810, -2, 0}, {9828, -2, 0},
      {9840, -3, 0}, {9852, 3, 1}, {9876, 3, 1}, {9900, -2, 0}, {9924, 3, 1},
      {9945, -5, -2}, {9948, 3, 1}, {9972, 2, 1}, {9975, -3, 0},
  };
  return records;
}

}  // namespace kempner
