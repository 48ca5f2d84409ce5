#pragma once

#include <string>

#include "orient/config.hpp"
#include "orient/topology.hpp"

namespace orient::cli {

enum class JobKind { Group, EulerForm, Omega, Orientability, Skeleton };

JobKind job_kind_from_name(const std::string& name);
const char* job_kind_name(JobKind kind);

enum class OutputFormat { Text, Structured };

struct JobResult {
    ConfigDocument structured;
    std::string text;
};

JobResult run_job(JobKind kind, const ConfigDocument& config);
JobResult run_config(JobKind kind, const std::string& path);
std::string render(const JobResult& result, OutputFormat format);

// Cohomology-class expressions: sums of rational-coefficient monomials in the
// model's generators, e.g. "3 g1^2*g2 + -1/2 g3" or "0". Generators are
// addressed by symbol or by position as g1, g2, ...
topo::CohClass parse_coh_class(const topo::ModelPtr& model, const std::string& text, int line);

} // namespace orient::cli
