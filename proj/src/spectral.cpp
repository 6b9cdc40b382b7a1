#include "specnet/spectral.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "specnet/errors.hpp"

namespace specnet {

Spectrum eigendecompose(const SystemMatrix& m) {
    const Eigen::MatrixXd& a = m.entries;
    if (a.rows() != a.cols() || a != a.transpose()) {
        throw DomainError("eigendecompose requires an exactly symmetric matrix");
    }
    Spectrum s;
    s.source_kind = m.kind;
    const Eigen::Index n = a.rows();
    if (n == 0) {
        s.trace_over_n = 0.0;
        return s;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw DomainError("symmetric eigendecomposition did not converge");
    }
    s.eigenvalues.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
    std::sort(s.eigenvalues.begin(), s.eigenvalues.end());
    s.trace_over_n = a.trace() / static_cast<double>(n);
    return s;
}

const std::vector<std::string>& spectral_metric_names() {
    static const std::vector<std::string> names = {
        "GE",  "LGE",  "NLGE",  "NC",  "LNC",  "NLNC",
        "GEn", "LGEn", "NLGEn", "NCn", "LNCn", "NLNCn",
    };
    return names;
}

bool is_spectral_metric_name(const std::string& name) {
    const auto& names = spectral_metric_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

MetricSpec metric_spec_for(const std::string& name) {
    std::string base = name;
    MetricSpec spec;
    if (!base.empty() && base.back() == 'n') {
        spec.gamma = GammaMode::one_over_n;
        base.pop_back();
    }
    if (base == "GE" || base == "NC") {
        spec.matrix = MatrixKind::adjacency;
    } else if (base == "LGE" || base == "LNC") {
        spec.matrix = MatrixKind::laplacian;
    } else if (base == "NLGE" || base == "NLNC") {
        spec.matrix = MatrixKind::normalized_laplacian;
    } else {
        std::ostringstream msg;
        msg << "unknown metric '" << name << "'; valid spectral metrics:";
        for (const auto& valid : spectral_metric_names()) msg << " " << valid;
        throw UsageError(msg.str());
    }
    spec.fg = (base == "GE" || base == "LGE" || base == "NLGE")
                  ? MetricShape::abs_linear
                  : MetricShape::exp_log;
    return spec;
}

std::string metric_name_for(const MetricSpec& spec) {
    std::string name;
    switch (spec.matrix) {
        case MatrixKind::adjacency: break;
        case MatrixKind::laplacian: name = "L"; break;
        case MatrixKind::normalized_laplacian: name = "NL"; break;
    }
    name += spec.fg == MetricShape::abs_linear ? "GE" : "NC";
    if (spec.gamma == GammaMode::one_over_n) name += "n";
    return name;
}

double evaluate_metric(const Spectrum& spectrum, MetricShape fg, GammaMode gamma) {
    const std::size_t n = spectrum.eigenvalues.size();
    if (n == 0) {
        if (fg == MetricShape::abs_linear) return 0.0;  // vacuous sum
        throw DomainError("natural-connectivity metrics are undefined on the empty graph");
    }
    const double center = spectrum.trace_over_n;
    const double gamma_value = gamma == GammaMode::one ? 1.0 : 1.0 / static_cast<double>(n);

    if (fg == MetricShape::abs_linear) {
        double sum = 0.0;
        for (double lambda : spectrum.eigenvalues) sum += std::abs(lambda - center);
        return gamma_value * sum;
    }

    // ln(gamma * sum exp(y_i)) via a log-sum-exp shift; eigenvalues can be
    // large enough to overflow exp otherwise.
    double shift = -std::numeric_limits<double>::infinity();
    for (double lambda : spectrum.eigenvalues) shift = std::max(shift, lambda - center);
    double sum = 0.0;
    for (double lambda : spectrum.eigenvalues) sum += std::exp(lambda - center - shift);
    return std::log(gamma_value) + shift + std::log(sum);
}

double evaluate_metric(const WeightedGraph& g, const MetricSpec& spec, bool topology_only) {
    if (g.node_count() == 0) {
        if (spec.fg == MetricShape::abs_linear) return 0.0;
        throw DomainError("natural-connectivity metrics are undefined on the empty graph");
    }
    Spectrum s = eigendecompose(build_matrix(g, spec.matrix, topology_only));
    return evaluate_metric(s, spec.fg, spec.gamma);
}

double named_metric(const WeightedGraph& g, const std::string& name, bool topology_only) {
    return evaluate_metric(g, metric_spec_for(name), topology_only);
}

}  // namespace specnet
