#ifndef HRNS_RECORD_HPP
#define HRNS_RECORD_HPP

#include "hrns/hclass.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace hrns {

enum class OutputFormat { Json, Csv, Plain };

std::optional<OutputFormat> parse_format(std::string_view name);

// One fully evaluated triple, ready for serialization.
struct OutputRecord {
    long long r = 0;
    long long n = 0;
    long long s = 0;
    long betti = 0;
    std::vector<Int> invariant_factors;
    Int order = 0; // 0 encodes infinite (order_string() renders it)
    std::optional<Classification> classification;
    std::optional<GeneratorBound> bounds;

    std::string order_string(bool csv = false) const;
    friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

// Abelianization data only.
OutputRecord make_ab_record(const HParams& p);
// Abelianization data plus classification and generator bounds.
OutputRecord make_classify_record(const HParams& p);

// Column order is fixed: r,n,s,betti,invariant_factors,order,verdict,reason,witness.
std::string csv_header();
std::string to_csv_row(const OutputRecord& rec);

// Compact single-line JSON with stable key order; big integers are decimal
// strings.  record_from_json_string inverts it.
std::string to_json_string(const OutputRecord& rec);
OutputRecord record_from_json_string(const std::string& text);

std::string to_plain(const OutputRecord& rec);

std::string format_record(const OutputRecord& rec, OutputFormat f, bool with_csv_header = true);

} // namespace hrns

#endif
