#pragma once

#include <iosfwd>
#include <string>

namespace esb::cli {

enum class OutputFormat { table, json };

struct CliConfig {
  OutputFormat output_format = OutputFormat::table;
  long characteristic = 0;
  int vertex_limit = 12;
  unsigned threads = 1;
  int verbosity = 0;
};

/// Vertex limit from EMPTY_SIMPLEX_VERTEX_LIMIT, or the compiled default.
int default_vertex_limit();

/// Runs the command line. Exit codes: 0 success, 2 validation, 3 violated
/// precondition, 4 size limit, 5 bound violation.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace esb::cli
