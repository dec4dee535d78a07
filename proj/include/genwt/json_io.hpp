#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "genwt/codes.hpp"
#include "genwt/gf.hpp"
#include "genwt/spaces.hpp"
#include "genwt/weights.hpp"

namespace genwt {

using Json = nlohmann::json;

inline Json field_to_json(const GF& F) {
    Json j;
    j["p"] = F.p();
    j["e"] = F.e();
    if (F.e() > 1) j["modulus"] = F.modulus();
    return j;
}

/// Fields deserialize to shared_ptr so loaded codes can keep them alive;
/// everything else in this library holds fields by reference.
inline std::shared_ptr<const GF> field_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("p")) throw std::invalid_argument("field: need {\"p\": ...}");
    int p = j.at("p").get<int>();
    int e = j.value("e", 1);
    if (j.contains("modulus"))
        return std::make_shared<const GF>(p, e, j.at("modulus").get<std::vector<int>>());
    if (e == 1) return std::make_shared<const GF>(p);
    return std::make_shared<const GF>(p, e);
}

inline Json space_to_json(const Space& S) {
    Json j;
    switch (S.kind()) {
        case Metric::hamming:
            j["kind"] = "hamming";
            j["n"] = S.n();
            break;
        case Metric::rank:
            j["kind"] = "rank";
            j["n"] = S.n();
            j["m"] = S.m();
            break;
        case Metric::sumrank: {
            j["kind"] = "sumrank";
            Json blocks = Json::array();
            for (auto [n, m] : S.matrix_blocks()) blocks.push_back(Json::array({n, m}));
            j["blocks"] = blocks;
            j["tail"] = S.tail();
            break;
        }
    }
    return j;
}

inline Space space_from_json(const Json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "hamming") return Space::hamming(j.at("n").get<int>());
    if (kind == "rank") return Space::rank(j.at("n").get<int>(), j.at("m").get<int>());
    if (kind == "sumrank") {
        std::vector<std::pair<int, int>> blocks;
        for (const Json& b : j.value("blocks", Json::array()))
            blocks.emplace_back(b.at(0).get<int>(), b.at(1).get<int>());
        return Space::sumrank(blocks, j.value("tail", 0));
    }
    throw std::invalid_argument("space: unknown kind '" + kind + "'");
}

inline Json mat_to_json(const Mat& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows; ++i) {
        Json row = Json::array();
        for (int c = 0; c < m.cols; ++c) row.push_back(m.at(i, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Json code_to_json(const LinearCode& C, const std::string& id = "") {
    Json j;
    j["space"] = space_to_json(C.space);
    j["field"] = field_to_json(C.field());
    j["generators"] = mat_to_json(C.generator());
    if (!id.empty()) j["id"] = id;
    return j;
}

/// A loaded code owning its field. LinearCode itself only borrows the field,
/// so keep the OwnedCode (or at least its `field`) alive while using `code`.
struct OwnedCode {
    std::shared_ptr<const GF> field;
    LinearCode code;
    std::string id;
};

inline OwnedCode code_from_json(const Json& j) {
    std::shared_ptr<const GF> field = field_from_json(j.at("field"));
    Space space = space_from_json(j.at("space"));
    const Json& gens = j.at("generators");
    if (!gens.is_array()) throw std::invalid_argument("code: generators must be an array of rows");
    Mat g(*field, static_cast<int>(gens.size()), space.nu());
    for (int i = 0; i < g.rows; ++i) {
        const Json& row = gens.at(i);
        if (static_cast<int>(row.size()) != space.nu())
            throw std::invalid_argument("code: generator row length != nu");
        for (int c = 0; c < g.cols; ++c) {
            int v = row.at(c).get<int>();
            if (v < 0 || v >= field->q())
                throw std::invalid_argument("code: entry outside [0, q)");
            g.at(i, c) = v;
        }
    }
    LinearCode code = make_code(space, *field, g);
    return OwnedCode{std::move(field), std::move(code), j.value("id", "")};
}

inline Json hierarchy_to_json(const WeightHierarchy& H) {
    Json j;
    if (!H.code_id.empty()) j["code_id"] = H.code_id;
    j["family"] = H.family;
    j["step"] = H.step;
    j["values"] = H.values;
    if (H.normalization > 1) j["normalization"] = H.normalization;
    Json w = Json::array();
    for (const Subspace& S : H.witnesses) w.push_back(mat_to_json(S.basis));
    j["witnesses"] = std::move(w);
    if (!H.complete) j["complete"] = false;
    if (!H.note.empty()) j["note"] = H.note;
    return j;
}

/// Witnesses are not rehydrated (the hierarchy JSON carries no field); all
/// scalar fields and values round-trip.
inline WeightHierarchy hierarchy_from_json(const Json& j) {
    WeightHierarchy H;
    H.code_id = j.value("code_id", "");
    H.family = j.at("family").get<std::string>();
    H.step = j.at("step").get<int>();
    H.values = j.at("values").get<std::vector<int>>();
    H.normalization = j.value("normalization", 1);
    H.complete = j.value("complete", true);
    H.note = j.value("note", "");
    return H;
}

}  // namespace genwt
