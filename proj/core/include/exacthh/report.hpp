#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace exacthh {

struct RankIdentity {
    std::string description;
    long long lhs = 0;
    long long rhs = 0;
    bool pass = false;
};

/* Structured result of one verification suite.  Dimension tables are indexed
 * from degree 0 and never extend past certified_degree; the identities ledger
 * records every comparison the verdict rests on, so a reader can re-derive
 * the verdict from the report alone.
 *
 * Verdicts: "pass" / "fail" from the ledger, "inapplicable" when a
 * precondition rules the instance out, "ledger-consistent" for the checks
 * that can only verify dimension bookkeeping rather than exactness of
 * explicitly constructed maps, and "inconclusive-above-truncation" when the
 * requested window exceeds what the truncation certifies. */
struct CheckReport {
    std::string check;
    std::vector<std::pair<std::string, std::string>> inputs;
    std::uint64_t field_char = 0;
    int max_degree = 0;
    int certified_degree = -1;
    std::vector<std::pair<std::string, std::vector<int>>> tables;
    std::vector<RankIdentity> identities;
    std::vector<std::string> notes;
    std::string verdict = "pass";
    double seconds = 0.0;

    void input(std::string name, std::string value);
    void table(std::string name, std::vector<int> dims);
    void note(std::string text);
    /* ledger rows; return whether the row passed */
    bool equal(std::string description, long long lhs, long long rhs);
    bool bounded(std::string description, long long lhs, long long rhs); // lhs <= rhs
    /* switch the verdict to "inapplicable" and record why */
    void fail_precondition(std::string why);
    bool all_identities_hold() const;
    /* settle the verdict from the ledger (keeps "inapplicable" and demotes
     * "ledger-consistent" to "fail" when a row failed) */
    void conclude();
};

std::string render_text(const CheckReport& r);

/* Wall-clock helper; when SOURCE_DATE_EPOCH is set the elapsed time is
 * reported as 0 so reruns are byte-identical. */
class CheckTimer {
public:
    CheckTimer();
    double stop() const;

private:
    std::chrono::steady_clock::time_point start_;
    bool frozen_ = false;
};

} // namespace exacthh
