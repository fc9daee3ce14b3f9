#pragma once

#include <string>
#include <vector>

#include "exseq_tools/io.hpp"

namespace exseq::tools {

enum class Status { Pass, Fail, Skipped };
std::string status_name(Status s);

struct Verdict {
    int criterion = 0;
    std::string id;
    std::string section;
    Status status = Status::Skipped;
    double seconds = 0;
    double limit_seconds = 0;  // 0 = no limit
    json details;
};

json to_json(const Verdict& v);

struct VerifyOptions {
    std::string archive_dir;  // where generated reports go; empty = not written
    unsigned threads = 0;
};

int criterion_count();
std::string criterion_id(int n);
std::string criterion_section(int n);
std::vector<std::string> section_names();

Verdict run_criterion(int n, const VerifyOptions& opt = {});
std::vector<Verdict> run_section(const std::string& section, const VerifyOptions& opt = {});

// the Toric grid used by the layer and threshold checks
std::vector<VarietySpec> toric_grid(int max_ell, int max_v, int max_alpha);

}  // namespace exseq::tools
