#pragma once

// Serialization of verdicts, identity checks, constants tables and potential
// decisions.  Two rules keep reruns byte-identical for a fixed seed and
// config: key order is insertion order (ordered_json throughout), and
// nothing time- or host-dependent enters a result file.  Run provenance
// (timestamp, invocation) goes to a separate meta file.  Headline numbers
// carry the raw double plus a five-decimal display string.

#include <string>
#include <vector>

#include "json.hpp"

#include "heis/constants.hpp"
#include "heis/potentials.hpp"
#include "heis/resolvent.hpp"

namespace heis {

using ojson = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// {"value": raw double, "display": "%.5f"}
ojson report_number(double v);

// "%.5f" with trailing-zero padding, the table display convention
std::string display5(double v);

ojson verdict_to_json(const Verdict& v, const std::string& member);
ojson identity_to_json(const IdentityCheck& c, const std::string& member);
ojson thm_v1_to_json(const ThmV1Report& r);
ojson thm_v2_to_json(const ThmV2Report& r);
ojson bounds_to_json(const PotentialBounds& b);

// wraps rows into {"schema_version": .., "kind": .., "results": [...]}
ojson report_envelope(const std::string& kind, ojson results);

// columns d, delta_star, kappa_d at five decimals
std::string table_csv(const std::vector<constants::TableRow>& rows);
ojson table_json(const std::vector<constants::TableRow>& rows);

// one line per verdict: member,inequality,delta,applicable,pass,margin
std::string verdict_csv(
    const std::vector<std::pair<std::string, Verdict>>& rows);

// provenance sidecar; the only place a timestamp may appear
ojson run_meta(const std::vector<std::string>& argv_tail,
               unsigned long long seed, const std::string& preset);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace heis
