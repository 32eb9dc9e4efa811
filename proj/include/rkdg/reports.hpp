#pragma once
#include <string>
#include <vector>

#include "rkdg/runner.hpp"

namespace rkdg {

// Shortest decimal form that round-trips the double exactly.
std::string format_double(double v);

// Writes the run artifacts into out_dir:
//   indicators_spatial_<t>.csv   t,j,M0..,J0..,D0..,loghJ0..,signJ0..
//   indicators_temporal_<t>.csv  t,j,node,d1..d{k+1}   (node = sample x)
//   solution_<t>.csv             x,u
//   error_budget.csv             n,t,tau,F,G,local_space,local_time,E_global,trusted
//   summary.json                 config echo, maxima, timings, file list
// Returns the list of files written (relative to out_dir).
std::vector<std::string> emit_reports(const RunArtifact& art, const std::string& out_dir);

// Human-readable digest of an emitted run directory (the report command).
std::string report_text(const std::string& out_dir);

// Study table: h,l1_error,estimate,effectivity rows plus the fitted order.
void emit_study(const StudyResult& study, const std::string& out_dir);

}  // namespace rkdg
