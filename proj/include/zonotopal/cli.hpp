#ifndef ZONOTOPAL_CLI_HPP
#define ZONOTOPAL_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace zonotopal::cli {

enum class Format { json, text };

struct JobSpec {
    std::string command;
    std::string vectors_path;
    std::string bases_path;
    std::string points_path;
    std::string family;
    std::string family_args;  // inline JSON or a path
    unsigned long seed = 2;
    Format format = Format::json;
    std::optional<unsigned> max_degree;
};

const std::vector<std::string>& verbs();

/// Runs one job. Exit status: 0 success, 1 contract violation, 2 parse error.
int run(const JobSpec& job, std::ostream& out, std::ostream& err);

/// Parses argv (argv[0] is the program name) and runs the job.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace zonotopal::cli

#endif
