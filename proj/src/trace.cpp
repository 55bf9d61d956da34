#include "buchi/trace.hpp"

#include <ostream>

namespace buchi {

const char* color_name(Color c) {
  switch (c) {
    case Color::White:
      return "white";
    case Color::Cyan:
      return "cyan";
    case Color::Blue:
      return "blue";
    case Color::Red:
      return "red";
  }
  return "?";
}

std::string format_trace_line(const TraceEvent& e) {
  using Kind = TraceEvent::Kind;
  switch (e.kind) {
    case Kind::Visit:
      return "visit " + std::to_string(e.s.index);
    case Kind::Edge:
      return "edge " + std::to_string(e.s.index) + " " + std::to_string(e.t.index);
    case Kind::Color:
      return "color " + std::to_string(e.s.index) + " " + color_name(e.from) + " " + color_name(e.to);
    case Kind::Report:
      return "report " + e.detail;
    case Kind::RootsPush:
      return "roots-push " + std::to_string(e.s.index);
    case Kind::RootsPop:
      return "roots-pop " + std::to_string(e.s.index);
    case Kind::Collapse:
      return "collapse " + e.acc.to_string();
    case Kind::Inactive:
      return "inactive " + std::to_string(e.s.index);
  }
  return "?";
}

void StreamTraceSink::on_event(const TraceEvent& e) { *out_ << format_trace_line(e) << '\n'; }

}  // namespace buchi
