#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "buchi/acceptance.hpp"
#include "buchi/state.hpp"

namespace buchi {

/// Per-state auxiliary colour of the nested-DFS family, two bits. Legal
/// transitions: white -> cyan, cyan -> {blue, red}, blue -> red.
enum class Color : std::uint8_t { White = 0, Cyan = 1, Blue = 2, Red = 3 };

const char* color_name(Color c);

/// One debug-trace event. Formats as one line each:
///   visit <s>
///   edge <s> <t>
///   color <s> <old> <new>
///   report <kind>
///   roots-push <s>
///   roots-pop <s>
///   collapse <B>
///   inactive <s>
struct TraceEvent {
  enum class Kind : std::uint8_t { Visit, Edge, Color, Report, RootsPush, RootsPop, Collapse, Inactive };

  Kind kind;
  StateRef s;
  StateRef t;
  Color from = Color::White;
  Color to = Color::White;
  AcceptanceSet acc;
  std::string detail;  // report kind

  static TraceEvent visit(StateRef s) { return {Kind::Visit, s, {}, {}, {}, {}, {}}; }
  static TraceEvent edge(StateRef s, StateRef t) { return {Kind::Edge, s, t, {}, {}, {}, {}}; }
  static TraceEvent color(StateRef s, Color from, Color to) {
    return {Kind::Color, s, {}, from, to, {}, {}};
  }
  static TraceEvent report(std::string kind) {
    return {Kind::Report, {}, {}, {}, {}, {}, std::move(kind)};
  }
  static TraceEvent roots_push(StateRef s) { return {Kind::RootsPush, s, {}, {}, {}, {}, {}}; }
  static TraceEvent roots_pop(StateRef s) { return {Kind::RootsPop, s, {}, {}, {}, {}, {}}; }
  static TraceEvent collapse(AcceptanceSet acc) { return {Kind::Collapse, {}, {}, {}, {}, acc, {}}; }
  static TraceEvent inactive(StateRef s) { return {Kind::Inactive, s, {}, {}, {}, {}, {}}; }
};

std::string format_trace_line(const TraceEvent& e);

class TraceSink {
 public:
  virtual ~TraceSink() = default;
  virtual void on_event(const TraceEvent& e) = 0;
};

/// Writes formatted lines to a stream.
class StreamTraceSink final : public TraceSink {
 public:
  explicit StreamTraceSink(std::ostream& out) : out_(&out) {}
  void on_event(const TraceEvent& e) override;

 private:
  std::ostream* out_;
};

/// Records events for tests comparing exploration orders across algorithms.
class RecordingTraceSink final : public TraceSink {
 public:
  void on_event(const TraceEvent& e) override { events_.push_back(e); }
  const std::vector<TraceEvent>& events() const noexcept { return events_; }

 private:
  std::vector<TraceEvent> events_;
};

}  // namespace buchi
