// Line-delimited interchange records: geometric progressions, polynomial
// pairs, factor and degenerate outcomes, and verification reports. One JSON
// object per line; integers travel as decimal strings, rationals as
// "num/den" in lowest terms.

#ifndef MONTY_RECORDS_HPP
#define MONTY_RECORDS_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>

#include "monty/selection.hpp"
#include "monty/verify.hpp"

namespace monty {

struct GpParams {
    Int a, k, p, m;
};

struct GpRecord {
    GeometricProgression gp;
    std::optional<GpParams> params;
};

struct PairRecord {
    PolyPair pair;
    std::optional<std::vector<Int>> gp_c;  // source GP, descending, when known
};

struct FactorRecord {
    FactorFound outcome;
};

struct DegenerateRecord {
    Int modulus;
    std::string reason;
    std::optional<IntPoly> f1, f2;  // populated when a pair was produced
};

using Record = std::variant<GpRecord, PairRecord, FactorRecord, DegenerateRecord>;

std::string to_line(const Record& record);
Record from_line(const std::string& line);

// Reads one record per nonempty line; throws std::invalid_argument with the
// line number on malformed input.
std::vector<Record> read_records(std::istream& in);

std::string report_line(const std::string& instance, const CheckResult& check);
std::string summary_line(const VerifyBatch& batch);

}  // namespace monty

#endif
