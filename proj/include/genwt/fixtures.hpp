#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "genwt/codes.hpp"
#include "genwt/gf.hpp"
#include "genwt/json_io.hpp"
#include "genwt/spaces.hpp"

namespace genwt {

/// Parses "P" or "P:E" into a field.
inline std::shared_ptr<const GF> parse_field_spec(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos) return std::make_shared<const GF>(std::stoi(s));
    int p = std::stoi(s.substr(0, colon));
    int e = std::stoi(s.substr(colon + 1));
    if (e == 1) return std::make_shared<const GF>(p);
    return std::make_shared<const GF>(p, e);
}

/// Parses the format Space::to_string emits: "hamming:N", "rank:NxM",
/// "srk:N1xM1,N2xM2+T" (blocks optional, tail optional).
inline Space parse_space_spec(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("space spec: expected kind:params, got '" + s + "'");
    std::string kind = s.substr(0, colon), rest = s.substr(colon + 1);
    if (kind == "hamming") return Space::hamming(std::stoi(rest));
    if (kind == "rank") {
        auto x = rest.find('x');
        if (x == std::string::npos) throw std::invalid_argument("space spec: rank needs NxM");
        return Space::rank(std::stoi(rest.substr(0, x)), std::stoi(rest.substr(x + 1)));
    }
    if (kind == "srk") {
        int tail = 0;
        auto plus = rest.find('+');
        std::string blockpart = rest;
        if (plus != std::string::npos) {
            tail = std::stoi(rest.substr(plus + 1));
            blockpart = rest.substr(0, plus);
        }
        std::vector<std::pair<int, int>> blocks;
        std::size_t pos = 0;
        while (pos < blockpart.size()) {
            auto comma = blockpart.find(',', pos);
            std::string seg = blockpart.substr(pos, comma == std::string::npos ? std::string::npos
                                                                               : comma - pos);
            pos = comma == std::string::npos ? blockpart.size() : comma + 1;
            if (seg.empty()) continue;
            auto x = seg.find('x');
            if (x == std::string::npos)
                tail += std::stoi(seg);  // bare number: more tail coordinates
            else
                blocks.emplace_back(std::stoi(seg.substr(0, x)), std::stoi(seg.substr(x + 1)));
        }
        return Space::sumrank(std::move(blocks), tail);
    }
    throw std::invalid_argument("space spec: unknown kind '" + kind + "'");
}

/// An embedded named code: prime field, space spec string, generator rows
/// (not necessarily RREF).
struct Fixture {
    std::string id;
    std::string note;
    int p;
    std::string space_spec;
    std::vector<std::vector<int>> generators;
};

inline const std::vector<Fixture>& fixture_registry() {
    static const std::vector<Fixture> table = {
        {"arc-6-3-7",
         "[6,3] code over GF(7) from a complete arc: MDS with no MDS subcode of dimension 2",
         7,
         "hamming:6",
         {{6, 1, 1, 6, 0, 0}, {1, 1, 6, 6, 2, 3}, {1, 1, 1, 1, 1, 1}}},
        {"c1-8-4-7",
         "[8,4] code over GF(7), first of the pair with equal MDS hierarchies but different duals",
         7,
         "hamming:8",
         {{1, 0, 0, 1, 0, 4, 6, 4},
          {0, 1, 0, 4, 0, 2, 3, 6},
          {0, 0, 1, 3, 0, 6, 0, 4},
          {0, 0, 0, 0, 1, 3, 6, 0}}},
        {"c2-8-4-7",
         "[8,4] code over GF(7), second of the pair with equal MDS hierarchies but different duals",
         7,
         "hamming:8",
         {{1, 0, 0, 0, 6, 3, 4, 0},
          {0, 1, 0, 0, 4, 1, 1, 4},
          {0, 0, 1, 0, 1, 1, 4, 6},
          {0, 0, 0, 1, 4, 3, 6, 4}}},
        {"m-1-1", "dimension-1 MDS subcode of c1-8-4-7", 7, "hamming:8",
         {{2, 2, 3, 5, 2, 1, 2, 4}}},
        {"m-2-1", "dimension-1 MDS subcode of c2-8-4-7", 7, "hamming:8",
         {{4, 1, 4, 2, 5, 2, 3, 1}}},
        {"m-1-2", "dimension-2 MDS subcode of c1-8-4-7", 7, "hamming:8",
         {{1, 0, 1, 4, 2, 2, 4, 1}, {0, 1, 3, 6, 2, 5, 1, 4}}},
        {"m-2-2", "dimension-2 MDS subcode of c2-8-4-7", 7, "hamming:8",
         {{1, 0, 4, 4, 5, 5, 2, 5}, {0, 1, 5, 6, 5, 3, 1, 2}}},
        {"n-1-1", "dimension-1 MDS subcode of the dual of c1-8-4-7", 7, "hamming:8",
         {{4, 5, 1, 1, 3, 1, 6, 1}}},
        {"n-2-1", "dimension-1 MDS subcode of the dual of c2-8-4-7", 7, "hamming:8",
         {{5, 2, 1, 6, 6, 3, 5, 2}}},
        {"n-1-2", "dimension-2 MDS subcode of the dual of c1-8-4-7", 7, "hamming:8",
         {{1, 0, 4, 1, 3, 4, 1, 1}, {0, 1, 3, 3, 6, 4, 4, 5}}},
        {"n-2-2", "dimension-2 MDS subcode of the dual of c2-8-4-7", 7, "hamming:8",
         {{1, 0, 6, 2, 5, 3, 4, 2}, {0, 1, 2, 6, 3, 5, 4, 5}}},
        {"n-2-3",
         "dimension-4 MDS code meeting the dual of c2-8-4-7 in dimension 3",
         7,
         "hamming:8",
         {{1, 0, 0, 0, 6, 3, 4, 1},
          {0, 1, 0, 0, 4, 1, 1, 4},
          {0, 0, 1, 0, 1, 1, 4, 3},
          {0, 0, 0, 1, 4, 3, 6, 6}}},
        {"srk-toy",
         "dimension-3 code in GF(2)^(2x2) x GF(2)^4 whose m-SOA hierarchy is (2,2,6)",
         2,
         "srk:2x2+4",
         {{1, 0, 0, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 1, 1, 1}}},
        {"srk-c1",
         "first of three codes in GF(2)^(2x2) x GF(2)^2 separating m-SOA weights from GSR weights",
         2,
         "srk:2x2+2",
         {{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 1}}},
        {"srk-c2",
         "second of three codes in GF(2)^(2x2) x GF(2)^2 separating m-SOA weights from GSR weights",
         2,
         "srk:2x2+2",
         {{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 0}}},
        {"srk-c3",
         "third of three codes in GF(2)^(2x2) x GF(2)^2 separating m-SOA weights from GSR weights",
         2,
         "srk:2x2+2",
         {{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 0, 1, 1, 0}}},
        {"parity3", "[3,2] binary even-weight code: an optimal anticode that is not an SOA", 2,
         "hamming:3",
         {{1, 0, 1}, {0, 1, 1}}},
        {"zero", "the zero code in GF(2)^4", 2, "hamming:4", {}},
    };
    return table;
}

inline std::vector<std::string> fixture_ids() {
    std::vector<std::string> ids;
    for (const Fixture& f : fixture_registry()) ids.push_back(f.id);
    return ids;
}

/// Instantiates a fixture by id; "<id>-dual" loads the dual of fixture <id>.
inline OwnedCode load_fixture(const std::string& id) {
    bool dualize = false;
    std::string base = id;
    const std::string suffix = "-dual";
    if (base.size() > suffix.size() &&
        base.compare(base.size() - suffix.size(), suffix.size(), suffix) == 0) {
        dualize = true;
        base = base.substr(0, base.size() - suffix.size());
    }
    for (const Fixture& f : fixture_registry()) {
        if (f.id != base) continue;
        auto field = std::make_shared<const GF>(f.p);
        Space space = parse_space_spec(f.space_spec);
        Mat g(*field, static_cast<int>(f.generators.size()), space.nu());
        for (int i = 0; i < g.rows; ++i) {
            if (static_cast<int>(f.generators[i].size()) != space.nu())
                throw std::logic_error("fixture " + f.id + ": bad row length");
            for (int c = 0; c < g.cols; ++c) g.at(i, c) = f.generators[i][c];
        }
        LinearCode code = make_code(space, *field, g);
        if (dualize) code = dual(code);
        return OwnedCode{std::move(field), std::move(code), id};
    }
    throw std::invalid_argument("unknown fixture '" + id + "'");
}

}  // namespace genwt
