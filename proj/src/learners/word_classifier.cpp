#include "etsc/learners/word_classifier.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace etsc {

std::vector<std::size_t> default_windows(std::size_t length) {
    std::vector<std::size_t> out;
    for (std::size_t div : {8u, 4u, 2u}) {
        std::size_t w = std::max<std::size_t>(3, length / div);
        w = std::min(w, length);
        if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(w);
    }
    return out;
}

double normal_quantile(double p) {
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("quantile needs p in (0, 1)");
    // Bisection on the CDF 0.5 * erfc(-x / sqrt 2).
    double lo = -40.0, hi = 40.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (0.5 * std::erfc(-mid / std::sqrt(2.0)) < p) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

std::vector<double> gaussian_breakpoints(std::size_t alphabet_size) {
    if (alphabet_size == 0) throw std::invalid_argument("alphabet size must be positive");
    std::vector<double> b;
    for (std::size_t i = 1; i < alphabet_size; ++i) {
        b.push_back(normal_quantile(static_cast<double>(i) / static_cast<double>(alphabet_size)));
    }
    return b;
}

std::vector<std::pair<std::size_t, std::uint64_t>> WordClassifier::words(
    std::span<const double> x) const {
    if (x.size() < length_) {
        throw std::invalid_argument("series of length " + std::to_string(x.size()) +
                                    " shorter than the fitted length " + std::to_string(length_));
    }
    x = x.first(length_);
    std::vector<double> sum(x.size() + 1, 0.0), sq(x.size() + 1, 0.0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        sum[i + 1] = sum[i] + x[i];
        sq[i + 1] = sq[i] + x[i] * x[i];
    }
    std::vector<std::pair<std::size_t, std::uint64_t>> out;
    for (std::size_t wi = 0; wi < windows_.size(); ++wi) {
        const std::size_t w = windows_[wi];
        const std::size_t segs = std::min(word_length_, w);
        for (std::size_t off = 0; off + w <= x.size(); ++off) {
            const double n = static_cast<double>(w);
            const double mean = (sum[off + w] - sum[off]) / n;
            const double var = std::max(0.0, (sq[off + w] - sq[off]) / n - mean * mean);
            const double sd = std::sqrt(var);
            const bool flat = sd <= 1e-8 * std::max(1.0, std::abs(mean));
            std::uint64_t code = 0;
            for (std::size_t s = 0; s < segs; ++s) {
                const std::size_t a = off + s * w / segs;
                const std::size_t b = off + (s + 1) * w / segs;
                double v = 0.0;
                if (!flat) {
                    const double seg_mean = (sum[b] - sum[a]) / static_cast<double>(b - a);
                    v = (seg_mean - mean) / sd;
                }
                const auto symbol = static_cast<std::uint64_t>(
                    std::upper_bound(breakpoints_.begin(), breakpoints_.end(), v) -
                    breakpoints_.begin());
                code = code * alphabet_size_ + symbol;
            }
            out.emplace_back(wi, code);
        }
    }
    return out;
}

std::vector<double> WordClassifier::features(std::span<const double> series) const {
    std::vector<double> f(vocabulary_.size(), 0.0);
    for (const auto& w : words(series)) {
        const auto it = vocabulary_.find(w);
        if (it != vocabulary_.end()) f[it->second] += 1.0;
    }
    for (std::size_t j = 0; j < f.size(); ++j) f[j] /= scale_[j];
    return f;
}

WordClassifier WordClassifier::fit(const Matrix& series, std::span<const Label> y,
                                   std::size_t num_classes, const WordOptions& options) {
    if (series.rows() == 0 || series.rows() != y.size()) {
        throw std::invalid_argument("word classifier needs matching non-empty series and labels");
    }
    if (options.word_length == 0) throw std::invalid_argument("word length must be positive");
    WordClassifier m;
    m.length_ = series.cols();
    m.word_length_ = options.word_length;
    m.alphabet_size_ = options.alphabet_size;
    m.breakpoints_ = gaussian_breakpoints(options.alphabet_size);
    m.windows_ = options.window_lengths.empty() ? default_windows(m.length_) : options.window_lengths;
    for (std::size_t w : m.windows_) {
        if (w == 0 || w > m.length_) {
            throw std::invalid_argument("window length " + std::to_string(w) +
                                        " exceeds series length " + std::to_string(m.length_));
        }
    }

    // Count every word, then keep only those whose count varies.
    std::map<std::pair<std::size_t, std::uint64_t>, std::vector<double>> counts;
    const std::size_t n = series.rows();
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& w : m.words(series.row(i))) {
            auto& c = counts[w];
            if (c.empty()) c.assign(n, 0.0);
            c[i] += 1.0;
        }
    }
    std::vector<const std::vector<double>*> kept;
    for (const auto& [word, c] : counts) {
        double mean = 0.0;
        for (double v : c) mean += v;
        mean /= static_cast<double>(n);
        double var = 0.0;
        for (double v : c) var += (v - mean) * (v - mean);
        var /= static_cast<double>(n);
        if (var <= 0.0) continue;
        m.vocabulary_.emplace(word, m.scale_.size());
        m.scale_.push_back(std::sqrt(var));
        kept.push_back(&c);
    }

    Matrix x(n, kept.size());
    for (std::size_t j = 0; j < kept.size(); ++j) {
        for (std::size_t i = 0; i < n; ++i) x(i, j) = (*kept[j])[i] / m.scale_[j];
    }
    m.logreg_ = LogisticRegression::fit(x, y, num_classes, options.logreg);
    return m;
}

std::vector<double> WordClassifier::predict_proba(std::span<const double> series) const {
    return logreg_.predict_proba(features(series));
}

ProbClassifierFactory word_classifier_factory(const WordOptions& options) {
    return [options](const Matrix& x, std::span<const Label> y, std::size_t num_classes) {
        return std::make_unique<WordClassifier>(WordClassifier::fit(x, y, num_classes, options));
    };
}

}  // namespace etsc
