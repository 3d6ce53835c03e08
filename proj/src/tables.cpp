#include "pcalg/tables.hpp"

#include "pcalg/grading.hpp"

#include <json.hpp>

#include <map>
#include <sstream>

namespace pcalg {

using nlohmann::json;

namespace {

struct RefRow {
    int k, l;
    long unpruned, pruned;
};

// published comparison figures per chain
const std::map<std::string, std::vector<RefRow>>& reference_rows() {
    static const std::map<std::string, std::vector<RefRow>> table{
        {"elliott",
         {{2, 2, 2, 0},
          {2, 3, 4, 1},
          {2, 4, 4, 2},
          {2, 6, 8, 7},
          {3, 4, 8, 1},
          {3, 6, 17, 9},
          {4, 6, 18, 9}}},
        {"o3sl3", {{1, 2, 3, 0}, {2, 2, 6, 2}, {2, 3, 9, 5}, {3, 3, 13, 7}}},
        {"cartan-sl3", {{2, 2, 12, 2}, {2, 3, 24, 6}, {3, 3, 42, 12}}},
        {"cartan-sl4",
         {{2, 2, 31, 8}, {2, 3, 102, 39}, {2, 4, 261, 129}, {3, 4, 478, 236}, {4, 4, 990, 492}}},
    };
    return table;
}

} // namespace

bool ComparisonTable::all_match() const {
    for (const auto& r : rows)
        if (!r.unpruned_match() || !r.pruned_match()) return false;
    return true;
}

ComparisonTable comparison_table(const Chain& chain) {
    auto it = reference_rows().find(chain.name);
    if (it == reference_rows().end())
        throw lie_error("no comparison table defined for chain " + chain.name);
    ComparisonTable out;
    out.chain = chain.name;
    for (const auto& ref : it->second) {
        TableRow row;
        row.k = ref.k;
        row.l = ref.l;
        row.ref_unpruned = ref.unpruned;
        row.ref_pruned = ref.pruned;
        row.unpruned = count_unpruned(chain.gens, ref.k, ref.l);
        row.pruned = count_pruned(chain.spec, chain.sub, chain.gens, ref.k, ref.l);
        out.rows.push_back(row);
    }
    return out;
}

ComparisonTable comparison_table(const std::string& chain_name) {
    return comparison_table(make_chain(chain_name));
}

std::string table_to_text(const ComparisonTable& t) {
    std::ostringstream os;
    os << "chain " << t.chain << "\n";
    os << "bracket      unpruned  ref   pruned  ref   status\n";
    for (const auto& r : t.rows) {
        std::string cls = "{q" + std::to_string(r.k) + ",q" + std::to_string(r.l) + "}";
        os << cls;
        for (size_t i = cls.size(); i < 13; ++i) os << ' ';
        auto cell = [&os](long v) {
            std::string s = std::to_string(v);
            os << s;
            for (size_t i = s.size(); i < 6; ++i) os << ' ';
        };
        cell(r.unpruned);
        cell(r.ref_unpruned);
        cell(r.pruned);
        cell(r.ref_pruned);
        if (r.unpruned_match() && r.pruned_match()) {
            os << "MATCH";
        } else {
            os << "DIFF(";
            if (!r.unpruned_match()) os << "unpruned";
            if (!r.unpruned_match() && !r.pruned_match()) os << ",";
            if (!r.pruned_match()) os << "pruned";
            os << ")";
        }
        os << "\n";
    }
    return os.str();
}

std::string table_to_json_text(const ComparisonTable& t) {
    json rows = json::array();
    for (const auto& r : t.rows) {
        rows.push_back({{"k", r.k},
                        {"l", r.l},
                        {"unpruned", r.unpruned},
                        {"pruned", r.pruned},
                        {"ref_unpruned", r.ref_unpruned},
                        {"ref_pruned", r.ref_pruned},
                        {"unpruned_match", r.unpruned_match()},
                        {"pruned_match", r.pruned_match()}});
    }
    return json{{"chain", t.chain}, {"rows", rows}}.dump(2);
}

} // namespace pcalg
