#include "kqr/ssx_io.hpp"

#include <map>

#include "json.hpp"

namespace kqr {

using json = nlohmann::ordered_json;

namespace {

std::string cell_id(int d, int x) { return "s" + std::to_string(d) + "_" + std::to_string(x); }

json ref_to_json(const SimplexRef& r) {
    json j;
    j["dim"] = r.base_dim;
    j["id"] = cell_id(r.base_dim, r.id);
    j["epi"] = r.epi;
    return j;
}

SimplexRef ref_from_json(const json& j, const std::vector<std::map<std::string, int>>& ids) {
    SimplexRef r;
    r.base_dim = j.at("dim").get<int>();
    r.epi = j.at("epi").get<std::vector<int>>();
    if (r.base_dim < 0 || r.base_dim >= (int)ids.size())
        throw std::runtime_error("SSX: ref dim out of range");
    const std::string id = j.at("id").get<std::string>();
    auto it = ids[r.base_dim].find(id);
    if (it == ids[r.base_dim].end())
        throw std::runtime_error("SSX: ref points to unknown cell " + id);
    r.id = it->second;
    return r;
}

json sset_to_json(const SimplicialSet& k) {
    json j;
    j["top_dim"] = k.top_dim();
    json cells = json::array();
    for (int d = 0; d <= k.top_dim(); ++d) {
        json level = json::array();
        for (int x = 0; x < k.count(d); ++x) level.push_back(cell_id(d, x));
        cells.push_back(level);
    }
    j["cells"] = cells;
    json faces = json::object();
    for (int d = 1; d <= k.top_dim(); ++d) {
        for (int x = 0; x < k.count(d); ++x) {
            json fs = json::array();
            for (int i = 0; i <= d; ++i) fs.push_back(ref_to_json(k.face(d, x, i)));
            faces[cell_id(d, x)] = fs;
        }
    }
    j["faces"] = faces;
    return j;
}

SimplicialSet sset_from_json(const json& j, std::vector<std::map<std::string, int>>* ids_out = nullptr) {
    int top = j.at("top_dim").get<int>();
    const json& cells = j.at("cells");
    if ((int)cells.size() != top + 1) throw std::runtime_error("SSX: cells/top_dim mismatch");
    std::vector<int> counts(top + 1);
    std::vector<std::map<std::string, int>> ids(top + 1);
    for (int d = 0; d <= top; ++d) {
        counts[d] = (int)cells[d].size();
        for (int x = 0; x < counts[d]; ++x) ids[d][cells[d][x].get<std::string>()] = x;
    }
    std::vector<std::vector<std::vector<SimplexRef>>> faces(top + 1);
    for (int d = 0; d <= top; ++d) faces[d].resize(counts[d]);
    const json& fj = j.at("faces");
    for (int d = 1; d <= top; ++d) {
        for (int x = 0; x < counts[d]; ++x) {
            std::string id = cells[d][x].get<std::string>();
            auto it = fj.find(id);
            if (it == fj.end()) throw std::runtime_error("SSX: missing faces for " + id);
            for (const auto& fr : *it) faces[d][x].push_back(ref_from_json(fr, ids));
            if ((int)faces[d][x].size() != d + 1)
                throw std::runtime_error("SSX: wrong face arity for " + id);
        }
    }
    SimplicialSet k(std::move(counts), std::move(faces));
    k.validate();
    if (ids_out) *ids_out = ids;
    return k;
}

}  // namespace

std::string to_ssx(const SimplicialSet& k) { return sset_to_json(k).dump(2) + "\n"; }

SimplicialSet from_ssx(const std::string& text) {
    return sset_from_json(json::parse(text));
}

std::string map_to_ssx(const SimplicialMap& f) {
    json j;
    j["source"] = sset_to_json(*f.source);
    j["target"] = sset_to_json(*f.target);
    json assignment = json::object();
    for (int d = 0; d <= f.source->top_dim(); ++d)
        for (int x = 0; x < f.source->count(d); ++x)
            assignment[cell_id(d, x)] = ref_to_json(f.at(d, x));
    j["assignment"] = assignment;
    return j.dump(2) + "\n";
}

SimplicialMap map_from_ssx(const std::string& text) {
    json j = json::parse(text);
    SimplicialMap f;
    std::vector<std::map<std::string, int>> target_ids;
    f.source = share(sset_from_json(j.at("source")));
    f.target = share(sset_from_json(j.at("target"), &target_ids));
    f.assign.resize(f.source->top_dim() + 1);
    const json& src_cells = j.at("source").at("cells");
    for (int d = 0; d <= f.source->top_dim(); ++d) {
        for (int x = 0; x < f.source->count(d); ++x) {
            const auto& rj = j.at("assignment").at(src_cells[d][x].get<std::string>());
            f.assign[d].push_back(ref_from_json(rj, target_ids));
        }
    }
    f.validate();
    return f;
}

}  // namespace kqr
