#include "exacthh/report.hpp"

#include <cstdlib>
#include <sstream>

namespace exacthh {

void CheckReport::input(std::string name, std::string value) {
    inputs.emplace_back(std::move(name), std::move(value));
}

void CheckReport::table(std::string name, std::vector<int> dims) {
    tables.emplace_back(std::move(name), std::move(dims));
}

void CheckReport::note(std::string text) { notes.push_back(std::move(text)); }

bool CheckReport::equal(std::string description, long long lhs, long long rhs) {
    RankIdentity id{std::move(description), lhs, rhs, lhs == rhs};
    identities.push_back(id);
    return id.pass;
}

bool CheckReport::bounded(std::string description, long long lhs, long long rhs) {
    RankIdentity id{std::move(description), lhs, rhs, lhs <= rhs};
    identities.push_back(id);
    return id.pass;
}

void CheckReport::fail_precondition(std::string why) {
    verdict = "inapplicable";
    notes.push_back(std::move(why));
}

bool CheckReport::all_identities_hold() const {
    for (const auto& id : identities)
        if (!id.pass) return false;
    return true;
}

void CheckReport::conclude() {
    if (verdict == "inapplicable") return;
    if (!all_identities_hold()) {
        verdict = "fail";
        return;
    }
    if (identities.empty() && certified_degree < 0) {
        verdict = "inconclusive-above-truncation";
        return;
    }
    if (verdict != "ledger-consistent") verdict = "pass";
}

std::string render_text(const CheckReport& r) {
    std::ostringstream out;
    out << "== " << r.check << " ==\n";
    for (const auto& [k, v] : r.inputs) out << "  " << k << ": " << v << "\n";
    out << "  field characteristic: " << r.field_char << "\n";
    out << "  max degree: " << r.max_degree << ", certified through degree " << r.certified_degree
        << "\n";
    for (const auto& [name, dims] : r.tables) {
        out << "  " << name << ":";
        for (int d : dims) out << " " << d;
        out << "\n";
    }
    for (const auto& id : r.identities)
        out << "  [" << (id.pass ? "ok" : "FAIL") << "] " << id.description << "  (" << id.lhs
            << " vs " << id.rhs << ")\n";
    for (const auto& n : r.notes) out << "  note: " << n << "\n";
    out << "  verdict: " << r.verdict << "  (" << r.seconds << "s)\n";
    return out.str();
}

CheckTimer::CheckTimer()
    : start_(std::chrono::steady_clock::now()), frozen_(std::getenv("SOURCE_DATE_EPOCH") != nullptr) {}

double CheckTimer::stop() const {
    if (frozen_) return 0.0;
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
}

} // namespace exacthh
