#include "mfl/bench.hpp"

// Embedded reference benchmark datasets. Each row pins the best-found
// objective and time-to-best of two algorithm columns on one named
// instance of the original benchmark corpus; the reporting tests and the
// `stats --fixture` command reproduce their published summary statistics
// from these rows.

namespace mfl {

const std::vector<FixtureRow>& fixture_table1() {
    // Local search without (a) vs with (b) scan-order diversification.
    static const std::vector<FixtureRow> rows = {
        {"MFL-2000-30-50-150-1", 61630, 62122, 1726.348, 181.595},
        {"MFL-2000-30-50-150-2", 62492, 63040, 3745.107, 73.286},
        {"MFL-2000-30-50-150-3", 61507, 61646, 1852.425, 221.44},
        {"MFL-2000-30-50-150-4", 61245, 61921, 3830.775, 44.141},
        {"MFL-2000-30-50-150-5", 61930, 62176, 3527.513, 315.984},
        {"MFL-2000-30-50-150-6", 61782, 61927, 3229.965, 160.065},
        {"MFL-2000-30-50-150-7", 63199, 63633, 2057.345, 421.592},
        {"MFL-2000-30-50-150-8", 61697, 62472, 1280.376, 345.35},
        {"MFL-2000-30-50-150-9", 62101, 62734, 2708.028, 65.963},
        {"MFL-2000-30-50-150-10", 61361, 61803, 3331.392, 435.053},
        {"MFL-3000-30-50-150-1", 92490, 93257, 2523.756, 682.149},
        {"MFL-3000-30-50-150-2", 94259, 94726, 1470.483, 823.921},
        {"MFL-3000-30-50-150-3", 93604, 94611, 4769.702, 414.944},
        {"MFL-3000-30-50-150-4", 94326, 95599, 4507.413, 207.148},
        {"MFL-3000-30-50-150-5", 92679, 93344, 1519.84, 117.414},
        {"MFL-3000-30-50-150-6", 93463, 93880, 327.474, 694.27},
        {"MFL-3000-30-50-150-7", 93270, 93473, 2084.077, 513.646},
        {"MFL-3000-30-50-150-8", 93946, 94700, 2725.755, 166.2},
        {"MFL-3000-30-50-150-9", 93519, 94572, 7797.316, 849.297},
        {"MFL-3000-30-50-150-10", 92776, 93736, 5954.239, 490.718},
        {"MFL-4000-30-50-150-1", 125858, 126888, 15123.270, 443.797},
        {"MFL-4000-30-50-150-2", 124319, 126047, 6096.143, 957.803},
        {"MFL-4000-30-50-150-3", 124771, 125631, 7479.600, 1354.779},
        {"MFL-4000-30-50-150-4", 126006, 126211, 1999.664, 804.443},
        {"MFL-4000-30-50-150-5", 124771, 124885, 2908.508, 605.723},
        {"MFL-4000-30-50-150-6", 126014, 126755, 9519.062, 1097.527},
        {"MFL-4000-30-50-150-7", 125199, 125990, 11586.715, 1160.502},
        {"MFL-4000-30-50-150-8", 124862, 125248, 4058.730, 961.35},
        {"MFL-4000-30-50-150-9", 124012, 125406, 8898.456, 1910.242},
        {"MFL-4000-30-50-150-10", 126551, 127766, 14458.103, 646.801},
        {"MFL-5000-30-50-150-1", 157136, 158286, 3804.742, 2629.553},
        {"MFL-5000-30-50-150-2", 155019, 155735, 15103.743, 1112.674},
        {"MFL-5000-30-50-150-3", 154729, 156398, 21890.742, 2855.883},
        {"MFL-5000-30-50-150-4", 156106, 156944, 2419.119, 2272.559},
        {"MFL-5000-30-50-150-5", 157244, 159051, 2580.811, 1142.879},
        {"MFL-5000-30-50-150-6", 155479, 155674, 18343.008, 798.002},
        {"MFL-5000-30-50-150-7", 156677, 158414, 24297.361, 1275.738},
        {"MFL-5000-30-50-150-8", 154841, 156788, 18190.207, 1836.021},
        {"MFL-5000-30-50-150-9", 156403, 156583, 24919.613, 2352.625},
        {"MFL-5000-30-50-150-10", 156635, 158449, 5207.167, 3011.262},
        {"MFL-6000-30-50-150-1", 189058, 190256, 10927.647, 2488.191},
        {"MFL-6000-30-50-150-2", 188377, 188879, 32426.342, 1257.266},
        {"MFL-6000-30-50-150-3", 187405, 188998, 28971.986, 4261.887},
        {"MFL-6000-30-50-150-4", 190525, 191049, 23910.098, 838.773},
        {"MFL-6000-30-50-150-5", 188544, 190849, 32917.391, 3459.965},
        {"MFL-6000-30-50-150-6", 185374, 188390, 33451.566, 972.449},
        {"MFL-6000-30-50-150-7", 189359, 190430, 5368.320, 4345.902},
        {"MFL-6000-30-50-150-8", 189956, 190555, 28552.289, 437.605},
        {"MFL-6000-30-50-150-9", 189688, 191025, 21427.699, 3856.262},
        {"MFL-6000-30-50-150-10", 189667, 191850, 16234.212, 1713.406},
    };
    return rows;
}

const std::vector<FixtureRow>& fixture_table2() {
    // Local search (a) vs tabu search (b), both with diversification.
    static const std::vector<FixtureRow> rows = {
        {"MFL-2000-30-50-150-1", 61629, 62329, 131.25, 93.107},
        {"MFL-2000-30-50-150-2", 62841, 63357, 320.66, 24.316},
        {"MFL-2000-30-50-150-3", 62537, 64201, 384.787, 119.711},
        {"MFL-2000-30-50-150-4", 62390, 63006, 326.883, 83.815},
        {"MFL-2000-30-50-150-5", 62114, 63113, 329.955, 48.839},
        {"MFL-2000-30-50-150-6", 63911, 65038, 406.71, 15.756},
        {"MFL-2000-30-50-150-7", 61875, 62493, 119.463, 36.981},
        {"MFL-2000-30-50-150-8", 61723, 62476, 227.707, 45.674},
        {"MFL-2000-30-50-150-9", 61675, 63775, 74.207, 34.556},
        {"MFL-2000-30-50-150-10", 61884, 62531, 428.186, 73.378},
        {"MFL-3000-30-50-150-1", 95041, 96131, 379.042, 97.79},
        {"MFL-3000-30-50-150-2", 93043, 94122, 572.949, 109.251},
        {"MFL-3000-30-50-150-3", 94205, 95107, 115.479, 62.744},
        {"MFL-3000-30-50-150-4", 93262, 95764, 647.689, 90.668},
        {"MFL-3000-30-50-150-5", 94185, 94914, 299.48, 36.014},
        {"MFL-3000-30-50-150-6", 93333, 94209, 146.055, 84.956},
        {"MFL-3000-30-50-150-7", 95676, 96394, 120.55, 60.992},
        {"MFL-3000-30-50-150-8", 93535, 94590, 534.518, 124.549},
        {"MFL-3000-30-50-150-9", 94285, 95525, 605.625, 93.656},
        {"MFL-3000-30-50-150-10", 94667, 95420, 386.158, 66.653},
        {"MFL-4000-30-50-150-1", 125664, 130818, 570.113, 696.824},
        {"MFL-4000-30-50-150-2", 124784, 126063, 2068.355, 201.914},
        {"MFL-4000-30-50-150-3", 128473, 132390, 275.664, 192.693},
        {"MFL-4000-30-50-150-4", 125349, 126661, 1509.285, 169.121},
        {"MFL-4000-30-50-150-5", 125503, 126763, 1502.961, 113.737},
        {"MFL-4000-30-50-150-6", 125517, 129593, 1453.544, 204.998},
        {"MFL-4000-30-50-150-7", 125740, 126993, 481.353, 145.972},
        {"MFL-4000-30-50-150-8", 126055, 127458, 896.573, 279.699},
        {"MFL-4000-30-50-150-9", 126233, 130044, 414.342, 393.488},
        {"MFL-4000-30-50-150-10", 125837, 127767, 439.529, 154.405},
        {"MFL-5000-30-50-150-1", 156681, 160816, 614.694, 273.674},
        {"MFL-5000-30-50-150-2", 157187, 165447, 1274.16, 227.326},
        {"MFL-5000-30-50-150-3", 158747, 161427, 240.041, 218.206},
        {"MFL-5000-30-50-150-4", 157219, 158720, 1815.309, 315.53},
        {"MFL-5000-30-50-150-5", 158110, 159451, 2444.637, 267.499},
        {"MFL-5000-30-50-150-6", 157757, 159514, 753.526, 377.615},
        {"MFL-5000-30-50-150-7", 158237, 159606, 1188.45, 159.828},
        {"MFL-5000-30-50-150-8", 157732, 160910, 1996.789, 298.26},
        {"MFL-5000-30-50-150-9", 156957, 159475, 1024.633, 245.323},
        {"MFL-5000-30-50-150-10", 156929, 159850, 2025.307, 321.59},
        {"MFL-6000-30-50-150-1", 188087, 191476, 2492.757, 270.323},
        {"MFL-6000-30-50-150-2", 189640, 191381, 596.487, 311.141},
        {"MFL-6000-30-50-150-3", 188109, 190161, 1501.423, 433.402},
        {"MFL-6000-30-50-150-4", 190034, 191799, 879.954, 442.25},
        {"MFL-6000-30-50-150-5", 186807, 188731, 1006.758, 341.676},
        {"MFL-6000-30-50-150-6", 187198, 188521, 1633.959, 195.176},
        {"MFL-6000-30-50-150-7", 190927, 192305, 3092.023, 1432.937},
        {"MFL-6000-30-50-150-8", 189214, 192464, 1814.912, 420.329},
        {"MFL-6000-30-50-150-9", 191293, 193905, 2843.013, 92.682},
        {"MFL-6000-30-50-150-10", 191798, 193021, 2296.57, 62.328},
    };
    return rows;
}

}  // namespace mfl
