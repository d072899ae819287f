#include "minbasis/report_json.hpp"

#include <fstream>
#include <sstream>

namespace minbasis {

using nlohmann::json;

json spec_to_json(const PartitionSpec& spec) {
    json j;
    j["h"] = spec.h;
    j["prefix"] = spec.prefix;
    j["period"] = spec.pattern.size();
    j["pattern"] = spec.pattern;
    return j;
}

PartitionSpec spec_from_json(const json& j) {
    if (!j.is_object()) raise(Errc::rejected, "spec document must be a JSON object");
    for (const char* field : {"h", "prefix", "period", "pattern"})
        if (!j.contains(field)) raise(Errc::rejected, std::string("missing field '") + field + "'");
    PartitionSpec spec;
    try {
        spec.h = j.at("h").get<std::uint32_t>();
        spec.prefix = j.at("prefix").get<std::vector<std::uint32_t>>();
        spec.pattern = j.at("pattern").get<std::vector<std::uint32_t>>();
        const auto period = j.at("period").get<std::uint64_t>();
        if (period != spec.pattern.size())
            raise(Errc::rejected, "period field disagrees with pattern length");
    } catch (const json::exception& e) {
        raise(Errc::rejected, std::string("malformed spec document: ") + e.what());
    }
    return spec;
}

void write_spec_file(const std::filesystem::path& path, const PartitionSpec& spec) {
    std::ofstream os(path);
    if (!os) raise(Errc::io_error, "cannot open '" + path.string() + "' for writing");
    os << dump_report(spec_to_json(spec));
    if (!os) raise(Errc::io_error, "write failed for '" + path.string() + "'");
}

PartitionSpec read_spec_file(const std::filesystem::path& path) {
    std::ifstream is(path);
    if (!is) raise(Errc::io_error, "cannot open '" + path.string() + "' for reading");
    json j;
    try {
        is >> j;
    } catch (const json::exception& e) {
        raise(Errc::io_error, "cannot parse '" + path.string() + "': " + e.what());
    }
    return spec_from_json(j);
}

json condition_to_json(const ConditionReport& report) {
    json j;
    j["kind"] = condition_kind_name(report.kind);
    j["holds"] = report.holds;
    j["periodic_proof"] = report.periodic_proof;
    j["bound"] = report.bound;
    j["witnesses"] = report.witnesses;
    if (report.kind == ConditionKind::thm1_counting) {
        j["modulus"] = report.modulus;
        j["residues"] = report.residues;
    }
    if (report.kind == ConditionKind::thm2_runs || report.kind == ConditionKind::thmE_runs) {
        j["run_length"] = report.run_length;
        json runs = json::array();
        for (const RunWitness& w : report.runs) {
            json entry;
            entry["part"] = w.part;
            if (w.start) entry["start"] = *w.start;
            else entry["start"] = nullptr;
            runs.push_back(entry);
        }
        j["runs"] = runs;
    }
    return j;
}

json thmB_to_json(const ThmBReport& report) {
    json j;
    j["kind"] = "THMB-DICHOTOMY";
    j["verdict"] = thmB_verdict_name(report.verdict);
    j["bound"] = report.bound;
    j["w1_pair_start"] = report.w1_pair_start ? json(*report.w1_pair_start) : json(nullptr);
    j["w2_pair_start"] = report.w2_pair_start ? json(*report.w2_pair_start) : json(nullptr);
    return j;
}

json witness_to_json(const WitnessRecord& record) {
    json j;
    j["a"] = record.a;
    j["part"] = record.part;
    j["T"] = record.T;
    j["n_T"] = record.n_T;
    j["in_hA"] = record.in_hA;
    j["in_hA_minus_a"] = record.in_hA_minus_a;
    j["verified"] = record.verified;
    j["modes"] = record.modes;
    return j;
}

json minimality_to_json(const MinimalityReport& report) {
    json j;
    j["schema"] = kReportSchema;
    j["spec"] = report.spec_id;
    j["h"] = report.h;
    j["T"] = report.T;
    j["N"] = report.N;
    j["a_max"] = report.a_max;
    j["coverage_threshold"] = report.coverage ? json(*report.coverage) : json(nullptr);
    j["certificate"] = {{"thm1", condition_to_json(report.certificate.thm1)},
                        {"thm2", condition_to_json(report.certificate.thm2)}};
    json elements = json::array();
    for (const ElementReport& element : report.elements) {
        json e;
        e["a"] = element.a;
        e["part"] = element.part;
        e["e_a_count"] = element.e_a_count;
        e["e_a_above_threshold"] =
            element.e_a_above_threshold ? json(*element.e_a_above_threshold) : json(nullptr);
        e["verdict"] = verdict_name(element.verdict);
        json witnesses = json::array();
        for (const WitnessRecord& record : element.witnesses) witnesses.push_back(witness_to_json(record));
        e["witnesses"] = witnesses;
        elements.push_back(e);
    }
    j["elements"] = elements;
    j["global_verdict"] = verdict_name(report.global);
    return j;
}

json decomposition_to_json(const Decomposition& d, bool verified) {
    json j;
    j["schema"] = kReportSchema;
    j["targets"] = d.targets;
    j["terms"] = d.terms;
    json sets = json::array();
    for (const auto& set : d.sets) sets.push_back(set);
    j["sets"] = sets;
    j["leftover"] = d.leftover;
    j["verified"] = verified;
    return j;
}

json row_to_json(const ClassificationRow& row) {
    json j;
    j["spec"] = row.spec_key;
    j["h"] = row.spec.h;
    j["thm1"] = condition_to_json(row.thm1);
    j["thm2"] = condition_to_json(row.thm2);
    if (row.thmB) {
        j["thmB"] = thmB_to_json(*row.thmB);
        j["thmB"]["relabeled"] = row.thmB_relabeled;
    } else {
        j["thmB"] = nullptr;
    }
    j["coverage_threshold"] = row.coverage ? json(*row.coverage) : json(nullptr);
    j["removable"] = row.removable;
    j["anomaly"] = row.anomaly;
    return j;
}

std::string dump_report(const json& j) {
    return j.dump(2) + "\n";
}

std::string render_gaps_text(const std::vector<std::uint64_t>& gap_values, std::uint64_t lo,
                             std::uint64_t hi) {
    std::ostringstream os;
    if (gap_values.empty()) {
        os << "no gaps in [" << lo << "," << hi << "]\n";
        return os.str();
    }
    os << gap_values.size() << " gaps in [" << lo << "," << hi << "]:";
    for (std::uint64_t g : gap_values) os << ' ' << g;
    os << '\n';
    return os.str();
}

std::string render_condition_text(const ConditionReport& report) {
    std::ostringstream os;
    os << condition_kind_name(report.kind) << "  holds=" << (report.holds ? "yes" : "no")
       << "  periodic_proof=" << (report.periodic_proof ? "yes" : "no") << "  bound="
       << report.bound << '\n';
    if (report.kind == ConditionKind::thm1_counting) {
        os << "  t witnesses:";
        for (std::uint64_t t : report.witnesses) os << ' ' << t;
        os << '\n';
        if (report.periodic_proof) {
            os << "  certified classes mod " << report.modulus << ":";
            for (std::uint64_t r : report.residues) os << ' ' << r;
            os << '\n';
        }
    } else {
        os << "  run length " << report.run_length << ", starts:";
        for (const RunWitness& w : report.runs) {
            os << " W_" << w.part << "=";
            if (w.start) os << *w.start;
            else os << "absent";
        }
        os << '\n';
    }
    return os.str();
}

std::string render_minimality_text(const MinimalityReport& report) {
    std::ostringstream os;
    os << "spec " << report.spec_id << "  h=" << report.h << "  T=" << report.T
       << "  N=" << report.N << '\n';
    os << "coverage threshold: ";
    if (report.coverage) os << *report.coverage;
    else os << "ABSENT";
    os << '\n';
    os << "certificate: thm1=" << (report.certificate.thm1.holds ? "holds" : "-")
       << " thm2=" << (report.certificate.thm2.holds ? "holds" : "-") << '\n';

    os << "      a   part   |E_a|   above    verdict\n";
    for (const ElementReport& element : report.elements) {
        char line[128];
        std::snprintf(line, sizeof line, "%7llu  %5u  %6llu  %7s    %s",
                      static_cast<unsigned long long>(element.a), element.part,
                      static_cast<unsigned long long>(element.e_a_count),
                      element.e_a_above_threshold
                          ? std::to_string(*element.e_a_above_threshold).c_str()
                          : "-",
                      verdict_name(element.verdict));
        os << line << '\n';
    }
    os << "global verdict: " << verdict_name(report.global) << '\n';
    return os.str();
}

}  // namespace minbasis
