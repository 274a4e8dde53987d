#pragma once

// Command implementations behind the jfl executable. Each command returns a CommandResult that
// renders either as text lines or as one JSON document.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "jfl/integer.hpp"

namespace jfl::cli {

enum class Status { Ok, Mismatch, Error };
enum class Format { Text, Json };

std::string_view to_string(Status s);

struct CommandResult {
  std::string command;
  Status status = Status::Ok;
  nlohmann::ordered_json payload = nlohmann::ordered_json::object();
  std::vector<std::string> deviations;
  std::vector<std::string> lines;
  // Printed after the deviations; empty for commands that only print a value.
  std::string status_line;

  // 0 for ok, 1 for mismatch, 2 for error.
  int exit_code() const;
};

nlohmann::ordered_json to_json(const CommandResult& r);
// Text mode prints the lines, one "deviation: ..." line per adopted assumption, then the status line.
std::string render(const CommandResult& r, Format format);

// JFL_MAX_DEGREE_GUARD, default 64.
int degree_guard();

CommandResult cmd_expand(const std::string& gen, int qmax);
CommandResult cmd_verify(const std::string& which, int qmax);
// dim is the real dimension; chern is a comma-separated list such as "c2sq=1350,c4=2610".
CommandResult cmd_genus(int dim, const std::string& chern);
CommandResult cmd_homotopy(const std::string& target, int max_degree);
CommandResult cmd_surjectivity(const std::string& n_param, int max_degree);
CommandResult cmd_image(int degree);
CommandResult cmd_verify_all(bool timing);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace jfl::cli
