#include "heliodet/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace heliodet {

CornerBox xywhn_to_xyxy(const BBox& b, double img_w, double img_h) {
    const double hw = 0.5 * b.w * img_w;
    const double hh = 0.5 * b.h * img_h;
    const double cx = b.cx * img_w;
    const double cy = b.cy * img_h;
    return {cx - hw, cy - hh, cx + hw, cy + hh};
}

BBox xyxy_to_xywhn(const CornerBox& c, double img_w, double img_h) {
    BBox b;
    b.cx = static_cast<float>(0.5 * (c.x1 + c.x2) / img_w);
    b.cy = static_cast<float>(0.5 * (c.y1 + c.y2) / img_h);
    b.w = static_cast<float>((c.x2 - c.x1) / img_w);
    b.h = static_cast<float>((c.y2 - c.y1) / img_h);
    return b;
}

double iou(const CornerBox& a, const CornerBox& b) {
    const double ix = std::min(a.x2, b.x2) - std::max(a.x1, b.x1);
    const double iy = std::min(a.y2, b.y2) - std::max(a.y1, b.y1);
    if (ix <= 0.0 || iy <= 0.0) return 0.0;
    const double inter = ix * iy;
    const double uni = a.area() + b.area() - inter;
    return uni > 0.0 ? inter / uni : 0.0;
}

double iou(const BBox& a, const BBox& b) {
    return iou(xywhn_to_xyxy(a, 1.0, 1.0), xywhn_to_xyxy(b, 1.0, 1.0));
}

std::vector<Detection> nms(const std::vector<Detection>& dets, double iou_threshold) {
    std::vector<Detection> sorted = dets;
    std::sort(sorted.begin(), sorted.end(), [](const Detection& a, const Detection& b) {
        if (a.score != b.score) return a.score > b.score;
        if (a.class_id != b.class_id) return a.class_id < b.class_id;
        return a.bbox.cx < b.bbox.cx;
    });

    std::vector<Detection> kept;
    kept.reserve(sorted.size());
    for (const auto& cand : sorted) {
        bool suppressed = false;
        for (const auto& k : kept) {
            if (k.class_id != cand.class_id) continue;
            if (iou(k.bbox, cand.bbox) > iou_threshold) {
                suppressed = true;
                break;
            }
        }
        if (!suppressed) kept.push_back(cand);
    }
    return kept;
}

bool clamp_bbox(BBox& b) {
    CornerBox c = xywhn_to_xyxy(b, 1.0, 1.0);
    c.x1 = std::clamp(c.x1, 0.0, 1.0);
    c.y1 = std::clamp(c.y1, 0.0, 1.0);
    c.x2 = std::clamp(c.x2, 0.0, 1.0);
    c.y2 = std::clamp(c.y2, 0.0, 1.0);
    if (c.x2 - c.x1 <= 0.0 || c.y2 - c.y1 <= 0.0) return false;
    b = xyxy_to_xywhn(c, 1.0, 1.0);
    return true;
}

}  // namespace heliodet
