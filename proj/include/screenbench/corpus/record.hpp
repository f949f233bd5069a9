#pragma once

#include <string>
#include <string_view>

namespace screenbench::corpus {

/// One citation: identifier, screening label and the text fields a model may
/// consume. Missing fields are empty strings, never absent records, so the
/// document count always matches the manifest.
struct DocumentRecord {
    std::string doc_id;
    std::string title;
    std::string abstract;
    std::string authors;
    std::string journal;
    int label = 0;  // 1 = included, 0 = excluded

    bool operator==(const DocumentRecord&) const = default;
};

/// Which fields compose the model input text.
enum class FeatureView { AllFeatures, TitleAbstract, AbstractOnly, TitleOnly };

std::string to_string(FeatureView view);
FeatureView feature_view_from_string(std::string_view name);

/// Joins the selected fields in fixed order (title, abstract, authors,
/// journal) with single spaces; empty fields collapse so the result carries
/// no leading, trailing or doubled separators.
std::string compose_text(const DocumentRecord& record, FeatureView view);

} // namespace screenbench::corpus
