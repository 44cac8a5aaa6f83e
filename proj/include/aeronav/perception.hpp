#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "aeronav/errors.hpp"
#include "aeronav/geometry.hpp"

namespace aeronav {

/// Confidence threshold below which detections are discarded.
inline constexpr double kDetectionThreshold = 0.4;

struct BBox {
    int u_min = 0;
    int v_min = 0;
    int u_max = 0;
    int v_max = 0;
};

struct Detection {
    std::string caption;
    BBox bbox;
    double confidence = 0.0;
};

/// Output of the caption -> ground -> segment pipeline for one view: the
/// surviving detections plus a per-pixel label grid aligned with the view.
struct PerceptionResult {
    std::vector<Detection> detections;
    int width = 0;
    int height = 0;
    std::vector<LabelId> semantic;
    LabelTable label_table;
};

/// Opaque view reference. Backends interpret the handle their own way; the
/// oracle backend only needs the rendered label grid that rides along in
/// the DepthView.
struct ViewRef {
    std::string handle;
};

class PerceptionPort {
public:
    virtual ~PerceptionPort() = default;
    virtual std::string backend_name() const = 0;
    virtual PerceptionResult perceive(const ViewRef& view, const DepthView& depth) const = 0;
};

/// Drop detections under `threshold` and zero out the label-grid pixels of
/// anything that was dropped, so grid and detections stay consistent.
inline PerceptionResult filter_by_confidence(PerceptionResult result, double threshold) {
    std::vector<Detection> kept;
    kept.reserve(result.detections.size());
    for (auto& d : result.detections) {
        if (d.confidence >= threshold) kept.push_back(std::move(d));
    }
    // A label survives iff some kept detection carries its caption.
    auto caption_kept = [&kept](const std::string& caption) {
        return std::any_of(kept.begin(), kept.end(),
                           [&caption](const Detection& d) { return d.caption == caption; });
    };
    std::set<LabelId> surviving;
    for (const auto& [id, caption] : result.label_table) {
        if (caption_kept(caption)) surviving.insert(id);
    }
    for (auto& label : result.semantic) {
        if (label != 0 && !surviving.count(label)) label = 0;
    }
    result.detections = std::move(kept);
    return result;
}

/// Test backend returning canned results, run through the same confidence
/// filter as every other backend.
class MockPerception final : public PerceptionPort {
public:
    MockPerception(PerceptionResult canned, double threshold = kDetectionThreshold)
        : canned_(std::move(canned)), threshold_(threshold) {}

    std::string backend_name() const override { return "mock"; }

    PerceptionResult perceive(const ViewRef&, const DepthView&) const override {
        return filter_by_confidence(canned_, threshold_);
    }

private:
    PerceptionResult canned_;
    double threshold_;
};

/// Placeholder for an out-of-process vision service. Constructing it is
/// fine; calling it without a configured endpoint reports the backend.
class RemotePerception final : public PerceptionPort {
public:
    explicit RemotePerception(std::string endpoint = "") : endpoint_(std::move(endpoint)) {}

    std::string backend_name() const override { return "remote"; }

    PerceptionResult perceive(const ViewRef&, const DepthView&) const override {
        throw BackendError(backend_name(),
                           endpoint_.empty()
                               ? "no perception endpoint configured"
                               : "remote perception requires an external vision service");
    }

private:
    std::string endpoint_;
};

}  // namespace aeronav
