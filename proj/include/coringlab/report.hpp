#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace coringlab {

/// Outcome of one check. Fail marks a violated law; Infeasible records that a
/// solver proved no certificate exists; Inapplicable that a precondition for
/// the check is absent. Only Fail counts against the process exit code.
enum class Status { Pass, Fail, Infeasible, Inapplicable };

inline std::string_view statusName(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Infeasible: return "infeasible";
    case Status::Inapplicable: return "inapplicable";
  }
  return "unknown";
}

/// One node of a result tree: a labeled status, short notes (dimensions,
/// certificates), identity traces for failures, and child checks.
struct ReportNode {
  std::string label;
  Status status = Status::Pass;
  std::vector<std::string> notes;
  std::vector<std::string> trace;
  std::vector<ReportNode> children;
};

inline ReportNode reportLeaf(std::string label, Status status) {
  ReportNode n;
  n.label = std::move(label);
  n.status = status;
  return n;
}

inline bool hasFailure(const ReportNode& n) {
  if (n.status == Status::Fail) return true;
  for (const ReportNode& c : n.children) {
    if (hasFailure(c)) return true;
  }
  return false;
}

namespace detail {

inline void renderInto(std::string& out, const ReportNode& n, int depth) {
  std::string pad(static_cast<std::size_t>(2 * depth), ' ');
  out += pad;
  out += n.label;
  out += ": ";
  out += statusName(n.status);
  out += '\n';
  for (const std::string& s : n.notes) {
    out += pad;
    out += "  - ";
    out += s;
    out += '\n';
  }
  for (const std::string& s : n.trace) {
    out += pad;
    out += "  > ";
    out += s;
    out += '\n';
  }
  for (const ReportNode& c : n.children) renderInto(out, c, depth + 1);
}

}  // namespace detail

/// Indented text, two spaces per level, one line per label and per note.
/// Pure function of the tree, so reports are bit-stable for fixed inputs.
inline std::string renderReport(const ReportNode& n) {
  std::string out;
  detail::renderInto(out, n, 0);
  return out;
}

}  // namespace coringlab
