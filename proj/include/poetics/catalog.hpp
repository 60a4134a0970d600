#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

// Prompt-grid vocabulary shared by the corpus model and the generation harness.
namespace poetics::catalog {

enum class Template { general, figurative, specific };

std::string_view to_string(Template t);
std::optional<Template> parse_template(std::string_view s);
std::span<const Template> all_templates();

// The 24 style labels used in prompts, including "a poem".
std::span<const std::string_view> styles();
bool is_known_style(std::string_view style);

enum class SubjectGroup { general, occasion, holiday };

// The 40 subject labels used in prompts.
std::span<const std::string_view> subjects();
std::optional<SubjectGroup> subject_group(std::string_view subject);

}  // namespace poetics::catalog
