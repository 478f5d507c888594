#pragma once

#include <string>
#include <vector>

#include "cambrian/coxeter.hpp"

namespace cambrian {

enum class CoxTag { Max, MinA, MinB, MinC, MinPathLike, Other };

struct CoxClass {
    CoxTag tag;
    int sources;
    int sinks;
};

std::string tag_name(CoxTag tag);

// cardinality of Fishburn's alternating scheme on m candidates
long long fishburn(int m);

// closed forms for elements maximizing / minimizing sources plus sinks
long long s_max_closed(const CoxeterSystem& sys);
long long s_min_closed(const CoxeterSystem& sys, const CoxClass& cls);

CoxClass classify(const CoxeterSystem& sys, const CoxeterElement& c);

struct Extremality {
    bool minimizer;
    bool maximizer;
};
Extremality is_extremal(const CoxeterSystem& sys, const CoxeterElement& c);

// product rule for reducible systems
long long s_reducible(const std::vector<long long>& component_counts);

// closed-form S_c for any classified element; throws for CoxTag::Other
long long s_closed(const CoxeterSystem& sys, const CoxClass& cls);

struct TableRow {
    std::string group;
    std::string quantity;
    long long engine_value;
    long long closed_value;
};

bool rows_all_match(const std::vector<TableRow>& rows);
std::string tables_markdown(const std::vector<TableRow>& rows);
std::string tables_csv(const std::vector<TableRow>& rows);

// the exceptional-groups table (max and min rows), closed forms only
std::vector<TableRow> exceptional_table_closed();

}  // namespace cambrian
