#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "etsc/time_series.hpp"

namespace etsc {

/// Outcome of one decision step: wait for more data or emit a label.
struct Decision {
    bool predict = false;
    Label label = -1;

    static Decision wait() { return {}; }
    static Decision emit(Label l) { return {true, l}; }

    friend bool operator==(const Decision&, const Decision&) = default;
};

/**
 * Per-stream decision state. observe() is called with growing prefixes of
 * one series, at the lengths returned by EarlyClassifier::checkpoints(),
 * until it emits.
 */
class DecisionSession {
public:
    virtual ~DecisionSession() = default;
    virtual Decision observe(const TimeSeries& prefix) = 0;
};

class EarlyClassifier {
public:
    virtual ~EarlyClassifier() = default;

    virtual std::string name() const = 0;
    virtual std::size_t series_length() const = 0;
    virtual std::size_t num_classes() const = 0;

    /// Prefix lengths at which the model is consulted; defaults to 1..T.
    virtual std::vector<std::size_t> checkpoints() const;

    /// Transform applied to an incoming series before it is streamed.
    virtual TimeSeries prepare(const TimeSeries& series) const { return series; }

    virtual std::unique_ptr<DecisionSession> open_session() const = 0;
};

struct StreamResult {
    Label label = -1;
    std::size_t trigger = 0;  ///< prefix length at which the label was emitted
};

/// Streams a full series through a fresh session; throws if nothing is emitted.
StreamResult classify_stream(const EarlyClassifier& model, const TimeSeries& series);

/// Harmonic mean of accuracy and 1 - earliness; 0 when both vanish.
double harmonic_mean(double accuracy, double earliness);

}  // namespace etsc
