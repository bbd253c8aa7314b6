#pragma once

#include <limits>
#include <string>
#include <vector>

#include "liouville/util.hpp"

namespace liouville {

enum class SegmentKind { s_minus, s_plus, arbitrary, full_prefix };

inline const char* segment_kind_token(SegmentKind k) {
  switch (k) {
    case SegmentKind::s_minus: return "S-";
    case SegmentKind::s_plus: return "S+";
    case SegmentKind::arbitrary: return "arb";
    case SegmentKind::full_prefix: return "full";
  }
  return "?";
}

/// One row of a built-in reference table: a lambda window [from, to] with the
/// reference partial sum L and chi2 = L^2 / length (full_prefix rows cover
/// the whole range [1, N]). All L values here were re-verified with an
/// independent sieve where feasible (every window row; prefixes to 10^5).
///
/// chi2_print_ok is false where the upstream print carries fewer digits than
/// L^2/length (worst case: 1.3 row 5 prints 0.064 for 64/10002 = 0.0064);
/// such cells are reproduced by recomputation, not asserted digit-for-digit.
/// corrected marks cells fixed relative to the upstream print; see the table
/// note for what was fixed.
struct ReferenceRow {
  int no;
  SegmentKind kind;
  u64 from;
  u64 to;
  i64 L;
  double chi2;
  bool chi2_print_ok = true;
  bool corrected = false;
};

struct ReferenceTable {
  const char* id;
  const char* title;
  std::vector<ReferenceRow> rows;
  double mean_chi2;        // as printed upstream; NaN when none is printed
  bool mean_print_ok;      // printed mean agrees with exact row arithmetic to 5e-4
  const char* note;
};

inline const std::vector<ReferenceTable>& reference_tables() {
  static const std::vector<ReferenceTable> tables = [] {
    std::vector<ReferenceTable> t;
    const auto S = SegmentKind::s_minus;
    const auto P = SegmentKind::s_plus;
    const auto A = SegmentKind::arbitrary;
    const auto F = SegmentKind::full_prefix;
    const double no_mean = std::numeric_limits<double>::quiet_NaN();

    t.push_back({"1.1",
                 "S-/S+ windows of length ~1000 around 10^6",
                 {
                     {1, S, 999001, 1000000, 6, 0.036},
                     {2, P, 1000001, 1001000, 10, 0.100},
                     {3, S, 1001001, 1002001, 49, 2.400, false},
                     {4, P, 1002002, 1003002, -37, 1.368},
                     {5, S, 1003003, 1004004, -12, 0.144},
                     {6, P, 1004005, 1005006, -28, 0.780, false},
                     {7, S, 1005007, 1006009, 3, 0.009},
                     {8, P, 1006010, 1007012, -39, 1.516},
                     {9, S, 1007013, 1008016, 12, 0.143},
                     {10, P, 1008017, 1009020, 6, 0.036},
                 },
                 0.653,
                 true,
                 "rows 3 and 6: chi2 printed at lower precision than L^2/length"});

    t.push_back({"1.2",
                 "S-/S+ windows of length ~5000 around 2.5*10^7",
                 {
                     {1, S, 24995001, 25000000, 0, 0.0},
                     {2, P, 25000001, 25005000, -42, 0.353},
                     {3, S, 25005001, 25010001, -27, 0.148, false},
                     {4, P, 25010002, 25015002, -103, 2.12, false},
                     {5, S, 25015003, 25020004, -76, 1.155},
                     {6, P, 25020005, 25025006, 48, 0.461},
                     {7, S, 25025007, 25030009, -13, 0.034},
                     {8, P, 25030010, 25035012, 119, 2.831},
                     {9, S, 25035013, 25040016, 124, 3.072, false},
                     {10, P, 25040017, 25045020, 62, 0.768},
                 },
                 1.094,
                 true,
                 "rows 3, 4 and 9: low-precision chi2 prints"});

    t.push_back({"1.3",
                 "S-/S+ windows of length ~10000 around 10^8",
                 {
                     {1, S, 99990001, 100000000, -146, 2.132},
                     {2, P, 100000001, 100010000, -88, 0.774},
                     {3, S, 100010001, 100020001, -11, 0.012},
                     {4, P, 100020002, 100030002, -43, 0.185},
                     {5, S, 100030003, 100040004, 8, 0.064, false},
                     {6, P, 100040005, 100050006, 36, 0.130},
                     {7, S, 100050007, 100060009, 23, 0.053},
                     {8, P, 100060010, 100070012, -49, 0.240},
                     {9, S, 100070013, 100080016, -20, 0.040},
                     {10, P, 100080017, 100090020, 112, 1.254},
                 },
                 0.488,
                 false,
                 "row 5 prints 0.064 for 64/10002 = 0.0064 (factor-of-10 slip), which also "
                 "shifts the printed mean; exact mean over the ten rows is 0.4826"});

    t.push_back({"1.4",
                 "S-/S+ windows of length ~100000 around 10^10",
                 {
                     {1, S, 9999900001, 10000000000, -232, 0.538},
                     {2, P, 10000000001, 10000100000, 340, 1.15, false},
                     {3, S, 10000100001, 10000200001, -249, 0.620},
                     {4, P, 10000200002, 10000300002, -115, 0.132, true, true},
                     {5, S, 10000300003, 10000400004, 216, 0.467},
                     {6, P, 10000400005, 10000500006, 456, 2.08, false},
                     {7, S, 10000500007, 10000600009, -255, 0.650},
                     {8, P, 10000600010, 10000700012, -235, 0.552},
                     {9, S, 10000700013, 10000800016, -44, 0.0194},
                     {10, P, 10000800017, 10000900020, 202, 0.408},
                     {11, S, 10000900021, 10001000025, -191, 0.364, false},
                     {12, P, 10001000026, 10001100030, 475, 2.26, false},
                     {13, S, 10001100031, 10001200036, 134, 0.179, false},
                     {14, P, 10001200037, 10001300042, -66, 0.0436},
                     {15, S, 10001300043, 10001400049, 427, 1.82, false},
                     {16, P, 10001400050, 10001500056, -303, 0.918},
                     {17, S, 10001500057, 10001600064, 276, 0.762},
                     {18, P, 10001600065, 10001700072, -210, 0.441},
                     {19, S, 10001700073, 10001800081, 267, 0.713},
                     {20, P, 10001800082, 10001900090, 291, 0.847},
                 },
                 0.768,
                 false,
                 "row 4's window corrected: the upstream print duplicates row 6's window, but "
                 "its L = -115 matches the correct S+ window of 100001^2 (verified by an "
                 "independent sieve); printed mean 0.768 does not match its own rows, exact "
                 "mean is 0.7485"});

    t.push_back({"2.1",
                 "arbitrary windows of length 1000",
                 {
                     {1, A, 10000001, 10001000, 36, 1.296},
                     {2, A, 12000001, 12001000, 28, 0.784},
                     {3, A, 13000001, 13001000, -14, 0.196},
                     {4, A, 15000001, 15001000, -10, 0.10, true, true},
                     {5, A, 45000001, 45001000, -18, 0.324},
                     {6, A, 47000001, 47001000, -36, 1.296},
                     {7, A, 56000001, 56001000, 24, 0.576},
                     {8, A, 70000001, 70001000, -44, 1.936},
                     {9, A, 90000001, 90001000, 14, 0.196},
                     {10, A, 95600001, 95601000, 28, 0.784},
                     {11, A, 147000001, 147001000, -26, 0.676},
                     {12, A, 237000001, 237001000, -24, 0.576},
                     {13, A, 400000001, 400001000, 26, 0.676},
                     {14, A, 413000001, 413001000, 10, 0.10},
                     {15, A, 517000001, 517001000, 14, 0.196},
                     {16, A, 530000001, 530001000, -32, 1.024},
                     {17, A, 731000001, 731001000, 50, 2.500},
                     {18, A, 871000001, 871001000, -42, 1.764},
                     {19, A, 979000001, 979001000, -20, 0.400},
                     {20, A, 997000001, 997001000, 14, 0.196},
                 },
                 0.780,
                 true,
                 "row 4's L sign corrected: the upstream print says +10, recomputation gives "
                 "-10 (chi2 unaffected)"});

    t.push_back({"3.1",
                 "L(N) at N = 10^8 .. 10^9 (values of Tanaka 1980)",
                 {
                     {1, F, 1, 100000000, -3884, 0.1508},
                     {2, F, 1, 200000000, -11126, 0.6189},
                     {3, F, 1, 300000000, -16648, 0.9238},
                     {4, F, 1, 400000000, -11200, 0.3136},
                     {5, F, 1, 500000000, -18804, 0.7072},
                     {6, F, 1, 600000000, -15350, 0.3927},
                     {7, F, 1, 700000000, -25384, 0.9204},
                     {8, F, 1, 800000000, -19292, 0.4652},
                     {9, F, 1, 900000000, -4630, 0.0238},
                     {10, F, 1, 1000000000, -25216, 0.6358},
                 },
                 0.5152,
                 true,
                 ""});

    t.push_back({"3.2",
                 "L(N) at record extrema (Borwein, Ferguson & Mossinghoff 2008)",
                 {
                     {1, F, 1, 293, -21, 1.5051},
                     {2, F, 1, 468, -24, 1.2308},
                     {3, F, 1, 684, -28, 1.1462},
                     {4, F, 1, 1132, -42, 1.5583},
                     {5, F, 1, 1760, -48, 1.3091},
                     {6, F, 1, 2804, -66, 1.5535},
                     {7, F, 1, 4528, -74, 1.2094},
                     {8, F, 1, 7027, -103, 1.5097},
                     {9, F, 1, 9840, -128, 1.665},
                     {10, F, 1, 24426, -186, 1.4164},
                     {11, F, 1, 59577, -307, 1.582},
                     {12, F, 1, 96862, -414, 1.7695},
                     {13, F, 1, 386434, -698, 1.2608},
                     {14, F, 1, 614155, -991, 1.5991},
                     {15, F, 1, 925985, -1253, 1.6955},
                     {16, F, 1, 2110931, -1803, 1.54},
                     {17, F, 1, 3456120, -2254, 1.47},
                     {18, F, 1, 5306119, -2931, 1.619},
                     {19, F, 1, 5384780, -2932, 1.5965},
                     {20, F, 1, 8803471, -3461, 1.3607},
                     {21, F, 1, 12897104, -4878, 1.845},
                     {22, F, 1, 76015169, -10443, 1.4347},
                     {23, F, 1, 184699341, -17847, 1.7245},
                     {24, F, 1, 281876941, -19647, 1.3694},
                     {25, F, 1, 456877629, -28531, 1.7817},
                     {26, F, 1, 712638284, -29736, 1.2408},
                     {27, F, 1, 1122289008, -43080, 1.6537},
                     {28, F, 1, 1806141032, -50356, 1.4039},
                     {29, F, 1, 2719280841, -62567, 1.4396},
                     {30, F, 1, 3847002655, -68681, 1.2262},
                     {31, F, 1, 4430947670, -73436, 1.2171},
                     {32, F, 1, 6321603934, -96460, 1.4719},
                     {33, F, 1, 10097286319, -123643, 1.514},
                     {34, F, 1, 15511912966, -158636, 1.6223},
                     {35, F, 1, 24395556935, -172987, 1.2266},
                     {36, F, 1, 39769975545, -238673, 1.4324},
                     {37, F, 1, 98220859787, -365305, 1.3586},
                     {38, F, 1, 149093624694, -461684, 1.4296},
                     {39, F, 1, 217295584371, -598109, 1.6463},
                     {40, F, 1, 341058604701, -726209, 1.5463},
                     {41, F, 1, 576863787872, -900668, 1.4062},
                     {42, F, 1, 835018639060, -1038386, 1.2913},
                     {43, F, 1, 1342121202207, -1369777, 1.398},
                     {44, F, 1, 2057920042277, -1767635, 1.5183},
                     {45, F, 1, 2147203463859, -1784793, 1.4836},
                     {46, F, 1, 3271541048420, -2206930, 1.4888},
                     {47, F, 1, 4686763744950, -2259182, 1.089},
                     {48, F, 1, 5191024637118, -2775466, 1.4839},
                     {49, F, 1, 7934523825335, -3003875, 1.1372},
                     {50, F, 1, 8196557476890, -3458310, 1.4591},
                     {51, F, 1, 12078577080679, -4122117, 1.4068},
                     {52, F, 1, 18790887277234, -4752656, 1.2021},
                     {53, F, 1, 20999693845505, -5400411, 1.3888},
                     {54, F, 1, 29254665607331, -6870529, 1.6136},
                     {55, F, 1, 48136689451475, -7816269, 1.2692},
                     {56, F, 1, 72204113780255, -11805117, 1.9301},
                     {57, F, 1, 117374745179544, -14496306, 1.7904},
                     {58, F, 1, 176064978093269, -17555181, 1.7504},
                 },
                 no_mean,
                 true,
                 "rows up to N = 10^5 are recomputed in full; beyond that the cited L values "
                 "are reported with chi2 evaluated from them"});

    return t;
  }();
  return tables;
}

inline const ReferenceTable* find_reference_table(const std::string& id) {
  for (const auto& t : reference_tables())
    if (id == t.id) return &t;
  return nullptr;
}

}  // namespace liouville
