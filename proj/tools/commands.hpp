#ifndef NCGEODE_TOOLS_COMMANDS_HPP
#define NCGEODE_TOOLS_COMMANDS_HPP

// Subcommands of the ncgeode binary. Each one writes its result to `out` and
// returns the process exit code. Invalid option values throw usage_error.

#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ncgeode::cli {

enum ExitCode { Ok = 0, Failure = 1, Usage = 2 };

class usage_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct ExpandOptions {
    std::string series = "g"; // g gamma h eta gessel theta
    std::string ring = "int"; // int polyt
    std::string basis = "S";
    int degree = 3;
    std::string format = "text";
};

struct KLagrangeOptions {
    int k = 2;
    std::string route = "t"; // t phi direct
    std::string basis = "S";
    int degree = 3;
    std::string format = "text";
};

struct ESeriesOptions {
    std::string series = "g"; // g gamma
    std::string route = "formula"; // formula trees system
    int k = 1; // annihilator used for gamma
    std::string basis = "S";
    int degree = 3;
    std::string format = "text";
};

struct TreesOptions {
    std::string kind = "lukasiewicz"; // lukasiewicz schroeder prime-schroeder pqr
    int n = 3;
    std::string shape; // pqr only, e.g. "3,1"
    std::string format = "text";
};

struct SpecializeOptions {
    std::string series = "gamma"; // g gamma (int); g_e for ones alternating first-only zq
    std::string map = "coeff-sum"; // catalan coeff-sum ribbon-u lambda-abs closed-form ones alternating first-only zq
    std::string form = "geode";    // closed-form only: catalan geode ribbon-sums lambda-sums
    int degree = 7;
    std::string format = "text";
};

struct VerifyOptions {
    std::string suite = "all";
    int degree = 4;
};

int run_expand(const ExpandOptions& o, std::ostream& out);
int run_klagrange(const KLagrangeOptions& o, std::ostream& out);
int run_eseries(const ESeriesOptions& o, std::ostream& out);
int run_trees(const TreesOptions& o, std::ostream& out);
int run_specialize(const SpecializeOptions& o, std::ostream& out);
int run_verify(const VerifyOptions& o, std::ostream& out);

// Full command line (argv[0] is the program name); usage errors go to err.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ncgeode::cli

#endif
