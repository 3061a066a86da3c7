#pragma once

#include <string>
#include <vector>

namespace ltt {

// One reproduced reference value: a named computation compared against the
// expected vector shipped with the library.
struct TableCheck {
    std::string name;
    std::vector<long long> computed;  // shaped like `expected` (padded with
                                      // zeros past the internal dimension)
    std::vector<long long> expected;
    bool pass = false;
    std::string note;  // method tag or mismatch detail
};

struct TableRunOptions {
    bool extended = false;  // adds the B4 trade row and the s=5,6 rows
    int max_n = 198;        // component-count sweep over even n in [4, max_n]
    int max_s = 4;          // intercalate rows for s = 1..max_s (cap 6)
    int jobs = 1;
    std::string cache_dir;  // empty = no cache
};

// Runs every check selected by the options, in a fixed order independent of
// the job count. Heavy cells run under the method recorded in the note.
std::vector<TableCheck> run_reference_tables(const TableRunOptions& options);

// Text rendering: one "<name> <vector> PASS|FAIL" line per check plus a
// summary line. Byte-identical across runs with equal options.
std::string format_table_checks(const std::vector<TableCheck>& checks);
std::string table_checks_to_json(const std::vector<TableCheck>& checks);

// Parsed copy of the expected-values file embedded at build time.
struct ReferenceTables {
    int version = 0;
    std::vector<std::pair<std::string, std::vector<long long>>> trade_rows;        // B3, B4, L2
    std::vector<std::pair<std::string, std::vector<long long>>> intercalate_rows;  // L1..L6
    int sweep_start = 4;
    int sweep_step = 2;
    std::vector<long long> sweep_values;
};
const ReferenceTables& reference_tables();

} // namespace ltt
