#include "etsc/early_classifier.hpp"

#include <stdexcept>

#include "etsc/preprocess.hpp"

namespace etsc {

std::vector<std::size_t> EarlyClassifier::checkpoints() const {
    std::vector<std::size_t> out(series_length());
    for (std::size_t t = 0; t < out.size(); ++t) out[t] = t + 1;
    return out;
}

StreamResult classify_stream(const EarlyClassifier& model, const TimeSeries& series) {
    const TimeSeries s = model.prepare(series);
    if (s.length() < model.series_length()) {
        throw std::invalid_argument("series shorter than the model's training length");
    }
    auto session = model.open_session();
    for (std::size_t t : model.checkpoints()) {
        const Decision d = session->observe(prefix(s, t));
        if (d.predict) return {d.label, t};
    }
    throw std::logic_error(model.name() + " did not emit by its final checkpoint");
}

double harmonic_mean(double accuracy, double earliness) {
    const double timeliness = 1.0 - earliness;
    const double denom = accuracy + timeliness;
    return denom > 0.0 ? 2.0 * accuracy * timeliness / denom : 0.0;
}

}  // namespace etsc
