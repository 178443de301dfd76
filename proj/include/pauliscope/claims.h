// Copyright 2026 The Pauliscope Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PAULISCOPE_CLAIMS_H
#define PAULISCOPE_CLAIMS_H

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace pauliscope {

enum class Scope { TwoQubit, NQubit, RingLine, Qutrit, All };
std::string to_string(Scope scope);
/// "two-qubit", "n-qubit", "ringline", "qutrit" or "all"; throws std::invalid_argument otherwise.
Scope parse_scope(std::string_view name);

enum class ClaimKind {
    /// Must reproduce the published value.
    Exact,
    /// Published value known or suspected to be off; reported, never a hard failure.
    Discrepancy,
};

enum class ClaimStatus {
    Pass,
    Fail,
    /// Discrepancy claim whose computed value agrees with the published one after all.
    Match,
    /// Discrepancy claim reproducing the value we expect instead of the published one.
    Flagged,
    /// Discrepancy claim agreeing with neither.
    Unexpected,
};
std::string to_string(ClaimStatus status);

struct Claim {
    std::string scope;
    /// Acceptance criterion (1..12), 0 when the claim belongs to none.
    int criterion = 0;
    std::string name;
    ClaimKind kind = ClaimKind::Exact;
    /// Published value.
    std::string expected;
    /// What we expect to compute when it differs from `expected` (discrepancies only).
    std::string established;
    std::string computed;
    std::string note;

    ClaimStatus status() const;
    /// Counts against `verify`: only exact claims can fail it.
    bool hard_failure() const {
        return status() == ClaimStatus::Fail;
    }
    /// Counts against acceptance: exact failures and unexpected discrepancies.
    bool acceptable() const;
    /// One line: status, scope, name, published vs computed.
    std::string line() const;
    nlohmann::json to_json() const;
};

/// Recomputes every registered claim in `scope`. Deterministic for any thread count.
std::vector<Claim> verify_claims(Scope scope, size_t threads = 0);

/// Regenerated tables, spectra and the full claim list as plain text.
std::string full_report(size_t threads = 0);

}  // namespace pauliscope

#endif
