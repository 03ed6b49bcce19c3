#pragma once

#include <vector>

namespace heliodet {

/// Normalized center-format box: cx, cy in [0,1], w, h in (0,1].
struct BBox {
    float cx = 0.f;
    float cy = 0.f;
    float w = 0.f;
    float h = 0.f;

    bool valid() const {
        return cx >= 0.f && cx <= 1.f && cy >= 0.f && cy <= 1.f && w > 0.f && w <= 1.f &&
               h > 0.f && h <= 1.f;
    }
};

/// Ground-truth object: category plus box.
struct Annotation {
    int class_id = 0;
    BBox bbox;
};

/// Model output: box plus objectness, class, and combined score.
struct Detection {
    BBox bbox;
    float objectness = 0.f;
    int class_id = 0;
    float score = 0.f;  // objectness * class probability
};

/// Axis-aligned box in corner form, pixel (or unit-square) coordinates.
struct CornerBox {
    double x1 = 0.0;
    double y1 = 0.0;
    double x2 = 0.0;
    double y2 = 0.0;

    double area() const {
        const double w = x2 - x1, h = y2 - y1;
        return (w > 0.0 && h > 0.0) ? w * h : 0.0;
    }
};

/// Center-format normalized box to pixel corner coordinates.
CornerBox xywhn_to_xyxy(const BBox& b, double img_w, double img_h);

/// Pixel corner box back to a normalized center-format box.
BBox xyxy_to_xywhn(const CornerBox& c, double img_w, double img_h);

/// Intersection over union. Degenerate (zero-area) inputs give 0.
double iou(const CornerBox& a, const CornerBox& b);

/// IoU of two normalized center-format boxes on the unit square.
double iou(const BBox& a, const BBox& b);

/// Greedy class-aware non-maximum suppression. Detections are ordered by
/// score descending (ties: smaller class_id, then smaller cx); a detection is
/// kept iff its IoU with every already-kept same-class detection is <=
/// iou_threshold. Output order is the kept order.
std::vector<Detection> nms(const std::vector<Detection>& dets, double iou_threshold);

/// Clamp a box to the unit square, preserving the clipped region.
/// Returns false if nothing remains.
bool clamp_bbox(BBox& b);

}  // namespace heliodet
