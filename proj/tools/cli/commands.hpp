#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "report.hpp"

namespace effkit::cli {

Report cmd_reduce(const std::string& pres_path, const std::string& pack_path);
Report cmd_bounds(const std::string& which, const std::string& args, const std::string& pack_path);
Report cmd_ideal_member(const std::string& gens_path, const std::string& target_path,
                        std::optional<int> max_deg, const std::string& ring);
Report cmd_ff_sunit(const std::string& places);
Report cmd_specialize(const std::string& reduced_path, const std::string& point,
                      const std::string& elem_path);
Report cmd_solve_unit(const std::string& pres_path, long size_cap);
Report cmd_solve_sunit_q(const std::string& primes, const std::string& abc, unsigned long cap,
                         const std::string& pack_path);
Report cmd_solve_exp(const std::string& pres_path, const std::string& gammas_path,
                     unsigned long cap, const std::string& pack_path);
Report cmd_multdep(const std::string& values, const std::string& target,
                   const std::string& pack_path);
// Every *.json fixture in dir, in name order. BadInput when there are none.
Report cmd_verify_paper(const std::filesystem::path& dir);

// Exit code for an exception escaping a command.
int exit_code_for(const std::exception& e);

}  // namespace effkit::cli
