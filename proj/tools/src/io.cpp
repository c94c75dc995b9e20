#include "io.hpp"

#include <fstream>
#include <iostream>
#include <stdexcept>

namespace spfc::io {

namespace {

// Rationals and square classes may be given as numbers or strings.
Rational rational_field(const json& v) {
    if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
    if (v.is_string()) return parse_rational(v.get<std::string>());
    throw std::invalid_argument("expected a rational such as \"3/10\", got " + v.dump());
}

SquareClass class_field(const json& v) {
    if (v.is_number_integer()) return SquareClass(v.get<std::int64_t>());
    if (v.is_string()) return SquareClass(std::stoll(v.get<std::string>()));
    throw std::invalid_argument("expected a squarefree integer, got " + v.dump());
}

UnramifiedCharacter character_field(const json& v) {
    if (v.is_number_integer() && v.get<int>() == 1) return UnramifiedCharacter::trivial();
    if (v.is_string()) return parse_character(v.get<std::string>());
    throw std::invalid_argument("expected a character such as \"lambda0\" or \"chi~chi_inv\", got " + v.dump());
}

const json& member(const json& obj, const char* key) {
    if (!obj.is_object() || !obj.contains(key)) throw std::invalid_argument(std::string("missing field '") + key + "'");
    return obj.at(key);
}

std::vector<int> int_list(const json& v) {
    if (!v.is_array()) throw std::invalid_argument("expected an integer array, got " + v.dump());
    return v.get<std::vector<int>>();
}

}  // namespace

json read_document(const std::string& path) {
    try {
        if (path == "-") return json::parse(std::cin);
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("cannot open '" + path + "'");
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("malformed JSON in '" + path + "': " + e.what());
    }
}

ArthurParameter parameter_from_json(const json& doc) {
    try {
        ArthurParameter psi;
        psi.n = member(doc, "n").get<int>();
        for (const auto& b : member(doc, "blocks")) {
            SimpleParameter blk;
            blk.tau_id = member(b, "tau_id").get<std::string>();
            blk.gl_rank = member(b, "gl_rank").get<int>();
            blk.b = member(b, "b").get<int>();
            auto type = member(b, "dual_type").get<std::string>();
            if (type == "symplectic") {
                blk.dual_type = DualType::Symplectic;
            } else if (type == "orthogonal") {
                blk.dual_type = DualType::Orthogonal;
            } else {
                throw std::invalid_argument("dual_type must be 'symplectic' or 'orthogonal', got '" + type + "'");
            }
            if (b.contains("central_class")) blk.central_class = class_field(b.at("central_class"));
            psi.blocks.push_back(std::move(blk));
        }
        return psi;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed parameter document: ") + e.what());
    }
}

json to_json(const ArthurParameter& psi) {
    json blocks = json::array();
    for (const auto& b : psi.blocks) {
        blocks.push_back({{"tau_id", b.tau_id},
                          {"gl_rank", b.gl_rank},
                          {"b", b.b},
                          {"dual_type", std::string(to_string(b.dual_type))},
                          {"central_class", b.central_class.value()}});
    }
    return {{"n", psi.n}, {"blocks", blocks}};
}

LocalSatakeData local_from_json(const json& doc) {
    try {
        LocalSatakeData local;
        if (doc.contains("prime") && !doc.at("prime").is_null()) local.prime = doc.at("prime").get<std::int64_t>();
        for (const auto& blk : member(doc, "blocks")) {
            std::vector<SatakeEntry> entries;
            for (const auto& e : blk) {
                entries.push_back({character_field(member(e, "character")), rational_field(member(e, "beta"))});
            }
            local.blocks.push_back(std::move(entries));
        }
        return local;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed local data: ") + e.what());
    }
}

json to_json(const LocalSatakeData& local) {
    json blocks = json::array();
    for (const auto& blk : local.blocks) {
        json entries = json::array();
        for (const auto& e : blk) entries.push_back({{"character", to_string(e.character)}, {"beta", to_string(e.beta)}});
        blocks.push_back(entries);
    }
    json out{{"blocks", blocks}};
    out["prime"] = local.prime ? json(*local.prime) : json(nullptr);
    return out;
}

UnitaryDualPoint point_from_json(const json& doc) {
    try {
        UnitaryDualPoint point;
        point.n = member(doc, "n").get<int>();
        if (doc.contains("e")) {
            for (const auto& t : doc.at("e")) {
                point.e.push_back({character_field(member(t, "character")), member(t, "m").get<int>(),
                                   rational_field(member(t, "alpha"))});
            }
        }
        const json& neg = member(doc, "negative");
        const json& sn = member(neg, "sn");
        if (sn.contains("lambda0")) point.neg.sn.lambda0_sizes = int_list(sn.at("lambda0"));
        point.neg.sn.trivial_sizes = int_list(member(sn, "trivial"));
        if (neg.contains("gl")) {
            for (const auto& g : neg.at("gl")) {
                point.neg.gl_blocks.push_back({character_field(member(g, "character")), member(g, "size").get<int>()});
            }
        }
        return point;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed point document: ") + e.what());
    }
}

json to_json(const Partition& p) { return p.vector(); }

json to_json(const JordanBlock& b) { return {{"character", to_string(b.character)}, {"size", b.size}}; }

json to_json(const ExponentTriple& t) {
    return {{"character", to_string(t.character)}, {"m", t.m}, {"alpha", to_string(t.alpha)}};
}

json to_json(const StronglyNegativeData& sn) { return {{"lambda0", sn.lambda0_sizes}, {"trivial", sn.trivial_sizes}}; }

json to_json(const UnitaryDualPoint& point) {
    json e = json::array();
    for (const auto& t : point.e) e.push_back(to_json(t));
    json gl = json::array();
    for (const auto& b : point.neg.gl_blocks) gl.push_back(to_json(b));
    return {{"n", point.n}, {"e", e}, {"negative", {{"sn", to_json(point.neg.sn)}, {"gl", gl}}}};
}

}  // namespace spfc::io
