#include "witting/golden.hpp"

#include <sstream>
#include <stdexcept>
#include <string>

namespace witting::golden {

namespace {

// Units are written 1, w, wb (= conj(w) = w^2) with optional minus sign.
constexpr std::string_view kRayTable =
    "n | phi0 | phi1 | phi2 | phi3\n"
    "0 | (1,0,0,0) | (0,1,0,0) | (0,0,1,0) | (0,0,0,1)\n"
    "1 | (0,1,-1,1) | (1,0,-1,-1) | (1,-1,0,1) | (1,1,1,0)\n"
    "2 | (0,1,-w,wb) | (1,0,-w,-wb) | (1,-w,0,wb) | (1,w,wb,0)\n"
    "3 | (0,1,-wb,w) | (1,0,-wb,-w) | (1,-wb,0,w) | (1,wb,w,0)\n"
    "4 | (0,1,-w,1) | (1,0,-1,-w) | (1,-wb,0,wb) | (1,w,1,0)\n"
    "5 | (0,1,-wb,wb) | (1,0,-w,-1) | (1,-1,0,w) | (1,wb,wb,0)\n"
    "6 | (0,1,-1,w) | (1,0,-wb,-wb) | (1,-w,0,1) | (1,1,w,0)\n"
    "7 | (0,1,-wb,1) | (1,0,-1,-wb) | (1,-w,0,w) | (1,wb,1,0)\n"
    "8 | (0,1,-1,wb) | (1,0,-w,-w) | (1,-wb,0,1) | (1,1,wb,0)\n"
    "9 | (0,1,-w,w) | (1,0,-wb,-1) | (1,-1,0,wb) | (1,w,w,0)\n";

// id: members, '*' marks the underlined tetrads.
constexpr std::string_view kBases =
    "1: 00 01 02 03\n"
    "2: 00 04 05 06\n"
    "3: 00 07 08 09\n"
    "4: 00 10 20 30 *\n"
    "5: 01 11 21 31 *\n"
    "6: 01 16 24 35\n"
    "7: 01 18 27 39\n"
    "8: 02 12 29 36\n"
    "9: 02 14 23 37\n"
    "10: 02 19 26 32 *\n"
    "11: 03 13 25 38\n"
    "12: 03 15 28 33 *\n"
    "13: 03 17 22 34\n"
    "14: 04 13 27 32\n"
    "15: 04 15 21 36\n"
    "16: 04 17 24 37 *\n"
    "17: 05 11 26 34\n"
    "18: 05 16 29 38 *\n"
    "19: 05 18 23 33\n"
    "20: 06 12 22 39 *\n"
    "21: 06 14 25 31\n"
    "22: 06 19 28 35\n"
    "23: 07 12 24 33\n"
    "24: 07 14 27 34 *\n"
    "25: 07 19 21 38\n"
    "26: 08 13 23 35 *\n"
    "27: 08 15 26 39\n"
    "28: 08 17 29 31\n"
    "29: 09 11 28 37\n"
    "30: 09 16 22 32\n"
    "31: 09 18 25 36 *\n"
    "32: 10 11 12 13\n"
    "33: 10 14 15 16\n"
    "34: 10 17 18 19\n"
    "35: 20 21 22 23\n"
    "36: 20 24 25 26\n"
    "37: 20 27 28 29\n"
    "38: 30 31 32 33\n"
    "39: 30 34 35 36\n"
    "40: 30 37 38 39\n";

// Opposite-state tables, same 10x4 layout as published.
constexpr std::string_view kOppositeA =
    "00:30 10:20 20:10 30:00\n"
    "01:31 11:21 21:11 31:01\n"
    "02:32 12:22 22:12 32:02\n"
    "03:33 13:23 23:13 33:03\n"
    "04:37 14:27 24:17 34:07\n"
    "05:38 15:28 25:18 35:08\n"
    "06:39 16:29 26:19 36:09\n"
    "07:34 17:24 27:14 37:04\n"
    "08:35 18:25 28:15 38:05\n"
    "09:36 19:26 29:16 39:06\n";

constexpr std::string_view kOpposite1 =
    "00:20 10:30 20:00 30:10\n"
    "01:21 11:31 21:01 31:11\n"
    "02:23 12:33 22:03 32:13\n"
    "03:22 13:32 23:02 33:12\n"
    "04:27 14:37 24:07 34:17\n"
    "05:29 15:39 25:09 35:19\n"
    "06:28 16:38 26:08 36:18\n"
    "07:24 17:34 27:04 37:14\n"
    "08:26 18:36 28:06 38:16\n"
    "09:25 19:35 29:05 39:15\n";

constexpr std::string_view kOpposite2 =
    "00:10 10:00 20:30 30:20\n"
    "01:11 11:01 21:31 31:21\n"
    "02:12 12:02 22:32 32:22\n"
    "03:13 13:03 23:33 33:23\n"
    "04:17 14:07 24:37 34:27\n"
    "05:18 15:08 25:38 35:28\n"
    "06:19 16:09 26:39 36:29\n"
    "07:14 17:04 27:34 37:24\n"
    "08:15 18:05 28:35 38:25\n"
    "09:16 19:06 29:36 39:26\n";

constexpr std::string_view kBasisPairsA =
    "1:38 2:40 3:39 4:4 5:5 6:28 7:21 8:30 9:14 10:10 "
    "11:19 12:12 13:23 14:9 15:29 16:16 17:25 18:18 19:11 20:20 "
    "21:7 22:27 23:13 24:24 25:17 26:26 27:22 28:6 29:15 30:8 "
    "31:31 32:35 33:37 34:36 35:32 36:34 37:33 38:1 39:3 40:2";

constexpr std::string_view kBasisPairs1 =
    "1:35 2:37 3:36 4:4 5:5 6:25 7:15 8:19 9:9 10:26 "
    "11:30 12:20 13:13 14:14 15:7 16:24 17:28 18:18 19:8 20:12 "
    "21:29 22:22 23:23 24:16 25:6 26:10 27:27 28:17 29:21 30:11 "
    "31:31 32:38 33:40 34:39 35:1 36:3 37:2 38:32 39:34 40:33";

constexpr std::string_view kBasisPairs2 =
    "1:32 2:34 3:33 4:4 5:5 6:29 7:17 8:8 9:23 10:20 "
    "11:11 12:26 13:14 14:13 15:28 16:16 17:7 18:31 19:19 20:10 "
    "21:25 22:22 23:9 24:24 25:21 26:12 27:27 28:15 29:6 30:30 "
    "31:18 32:1 33:3 34:2 35:38 36:40 37:39 38:35 39:37 40:36";

int parse_label(const std::string& s) {
  if (s.size() != 2 || s[0] < '0' || s[0] > '3' || s[1] < '0' || s[1] > '9') {
    throw std::logic_error("bad ray label in golden table: " + s);
  }
  return (s[0] - '0') * 10 + (s[1] - '0');
}

Eisenstein parse_unit_token(std::string_view tok) {
  int sign = 1;
  if (!tok.empty() && tok.front() == '-') {
    sign = -1;
    tok.remove_prefix(1);
  }
  if (tok == "0") return {};
  if (tok == "1") return Eisenstein::unit(sign, 0);
  if (tok == "w") return Eisenstein::unit(sign, 1);
  if (tok == "wb") return Eisenstein::unit(sign, 2);
  throw std::logic_error("bad coordinate token in golden table");
}

std::string_view pick(char which, std::string_view a, std::string_view one, std::string_view two) {
  switch (which) {
    case 'a': return a;
    case '1': return one;
    case '2': return two;
    default: throw std::invalid_argument(std::string("unknown J table '") + which + "'");
  }
}

}  // namespace

std::string_view ray_table_text() { return kRayTable; }

std::vector<Vec4> ray_table_coords() {
  std::vector<Vec4> out(40);
  std::istringstream in{std::string(kRayTable)};
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    std::istringstream row(line);
    int n = 0;
    std::string bar;
    row >> n;
    for (int l = 0; l < 4; ++l) {
      std::string cell;
      row >> bar >> cell;
      // cell = "(x,y,z,t)"
      std::string_view body(cell);
      body = body.substr(1, body.size() - 2);
      Vec4 v{};
      for (int k = 0; k < 4; ++k) {
        auto comma = body.find(',');
        v[k] = parse_unit_token(body.substr(0, comma));
        body = comma == std::string_view::npos ? std::string_view{} : body.substr(comma + 1);
      }
      out[10 * l + n] = v;
    }
  }
  return out;
}

const std::vector<BasisRow>& bases() {
  static const std::vector<BasisRow> rows = [] {
    std::vector<BasisRow> out;
    std::istringstream in{std::string(kBases)};
    std::string line;
    while (std::getline(in, line)) {
      std::istringstream row(line);
      BasisRow b;
      std::string id;
      row >> id;
      b.id = std::stoi(id);
      for (auto& m : b.members) {
        std::string lab;
        row >> lab;
        m = parse_label(lab);
      }
      std::string star;
      b.underlined = static_cast<bool>(row >> star) && star == "*";
      out.push_back(b);
    }
    return out;
  }();
  return rows;
}

std::vector<int> opposite_table(char which) {
  std::vector<int> opp(40, -1);
  std::istringstream in{std::string(pick(which, kOppositeA, kOpposite1, kOpposite2))};
  std::string tok;
  while (in >> tok) {
    opp.at(parse_label(tok.substr(0, 2))) = parse_label(tok.substr(3, 2));
  }
  return opp;
}

std::vector<int> basis_pairing(char which) {
  std::vector<int> pair(40, -1);
  std::istringstream in{std::string(pick(which, kBasisPairsA, kBasisPairs1, kBasisPairs2))};
  std::string tok;
  while (in >> tok) {
    auto colon = tok.find(':');
    pair.at(std::stoi(tok.substr(0, colon)) - 1) = std::stoi(tok.substr(colon + 1));
  }
  return pair;
}

}  // namespace witting::golden
