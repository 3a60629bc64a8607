#ifndef PCF_ERRORS_HPP
#define PCF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pcf {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input files (graph, list, coloring formats).
class ParseError : public Error {
public:
    enum class Code {
        MalformedLine,
        OutOfRangeId,
        SelfLoop,
        DuplicateEdge,
    };

    ParseError(Code code, const std::string& msg) : Error(msg), code_(code) {}
    Code code() const { return code_; }

private:
    Code code_;
};

// Query with a vertex id that is not present in the graph.
class UnknownVertexError : public Error {
public:
    explicit UnknownVertexError(int v)
        : Error("unknown vertex id " + std::to_string(v)), vertex_(v) {}
    int vertex() const { return vertex_; }

private:
    int vertex_;
};

// A caller-visible precondition failed (slack deficit, density bound,
// solver cap).  Maps to exit code 2 in the CLI.
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& msg) : Error(msg) {}
};

// An internal invariant failed.  The reduction proofs guarantee these
// never fire; if one does it is a bug, never a fallback path.  Maps to
// exit code 4 in the CLI.
class InternalError : public Error {
public:
    explicit InternalError(const std::string& msg) : Error(msg) {}
};

#define PCF_CHECK(cond, msg)                                        \
    do {                                                            \
        if (!(cond)) throw ::pcf::InternalError(std::string(msg));  \
    } while (0)

}  // namespace pcf

#endif
