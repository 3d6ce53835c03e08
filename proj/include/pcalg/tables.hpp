#ifndef PCALG_TABLES_HPP
#define PCALG_TABLES_HPP

#include "pcalg/chains.hpp"

#include <string>
#include <vector>

namespace pcalg {

// One bracket class {q_k, q_l} of a chain's comparison table. Computed
// counts follow the documented conventions (stars-and-bars multisets for
// the unpruned column, max-over-pairs refined admissible count for the
// pruned one); the reference columns carry the published figures. Rows
// where the two disagree are flagged rather than tuned.
struct TableRow {
    int k = 0, l = 0;
    long unpruned = 0, pruned = 0;
    long ref_unpruned = 0, ref_pruned = 0;
    bool unpruned_match() const { return unpruned == ref_unpruned; }
    bool pruned_match() const { return pruned == ref_pruned; }
};

struct ComparisonTable {
    std::string chain;
    std::vector<TableRow> rows;
    bool all_match() const;
};

ComparisonTable comparison_table(const Chain& chain);
ComparisonTable comparison_table(const std::string& chain_name);

std::string table_to_text(const ComparisonTable& t);
std::string table_to_json_text(const ComparisonTable& t);

} // namespace pcalg

#endif
