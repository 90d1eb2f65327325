from rest_framework import renderers

from .objects import InvalidParameterError


class JSONRenderer(renderers.JSONRenderer):
    """
    Structured output: the serialized Document, indented.
    """

    media_type = "application/json"
    format = "json"

    def get_indent(self, accepted_media_type, renderer_context):
        return (renderer_context or {}).get("indent", 2)


class TextRenderer(renderers.BaseRenderer):
    """
    Human-readable output of a serialized Document. The command named in
    ``renderer_context["command"]`` selects ``render_<command>``; errors are
    rendered the same way for every command.
    """

    media_type = "text/plain"
    format = "text"
    charset = "utf-8"

    def render(self, data, accepted_media_type=None, renderer_context=None):
        renderer_context = renderer_context or {}
        if data.get("errors"):
            lines = self.render_errors(data["errors"])
        else:
            command = renderer_context.get("command", "")
            handler = getattr(self, "render_{}".format(command), self.render_generic)
            lines = handler(data["data"])
        return ("\n".join(lines) + "\n").encode(self.charset)

    @staticmethod
    def _braces(labels):
        return "{" + ",".join(labels) + "}"

    @staticmethod
    def _certificate(certificate):
        if certificate is None:
            return ""
        if isinstance(certificate, list):
            return "; ".join(item.get("description") or " ".join(item["vertices"]) for item in certificate)
        return certificate.get("description") or "cycle " + " ".join(certificate["vertices"])

    def render_errors(self, errors):
        lines = []
        for error in errors:
            title = error.get("title") or "error"
            line = "error: {}: {}".format(title, error.get("detail", ""))
            source = error.get("source") or {}
            if source.get("line") is not None:
                line += " (line {}, column {})".format(source["line"], source.get("column"))
            elif source.get("pointer"):
                line += " ({})".format(source["pointer"])
            lines.append(line)
            certificate = (error.get("meta") or {}).get("certificate")
            if certificate:
                lines.append("  witness: {}".format(self._certificate(certificate)))
        return lines

    def render_generic(self, data, indent=0):
        lines = []
        pad = "  " * indent
        for key, value in data.items():
            if isinstance(value, dict):
                lines.append("{}{}:".format(pad, key))
                lines.extend(self.render_generic(value, indent + 1))
            else:
                lines.append("{}{}: {}".format(pad, key, value))
        return lines

    def render_check(self, data):
        lines = []
        for name, entry in data["classes"].items():
            line = "{}: {}".format(name, "yes" if entry["member"] else "no")
            if not entry["member"]:
                line += "  ({})".format(self._certificate(entry["certificate"]))
            lines.append(line)
        if data["components"] > 1:
            lines.append("components: {}".format(data["components"]))
            for part in data.get("per_component", ()):
                members = [name for name, entry in part["classes"].items() if entry["member"]]
                lines.append(
                    "  {}: {}".format(self._braces(part["vertices"]), ", ".join(members) or "none")
                )
        return lines

    def render_hull(self, data):
        lines = ["{} hull of {}: {}".format(data["kind"], self._braces(data["seed"]), " ".join(data["vertices"]))]
        for step in data["trace"]:
            lines.append("  round {}: {}".format(step["round"], " ".join(step["added"])))
        return lines

    def render_cover(self, data):
        lines = ["r={}: {}".format(level["radius"], level["ball"]) for level in data["levels"]]
        lines.append("verdict: {}".format(data["verdict"]))
        return lines

    def _tree(self, node, indent):
        pad = "  " * indent
        if node["kind"] == "prime":
            return ["{}prime {}: {}".format(pad, node["tag"], " ".join(node["vertices"]))]
        if node["kind"] == "product":
            lines = ["{}product of {}".format(pad, len(node["factors"]))]
            for factor in node["factors"]:
                lines.extend(self._tree(factor, indent + 1))
            return lines
        lines = ["{}amalgam along {}".format(pad, self._braces(node["separator"]))]
        lines.extend(self._tree(node["left"], indent + 1))
        lines.extend(self._tree(node["right"], indent + 1))
        return lines

    def render_decompose(self, data):
        lines = self._tree(data["tree"], 0)
        lines.append("verified: {}".format("yes" if data["verified"] else "no"))
        lines.extend("  {}".format(diagnostic) for diagnostic in data["diagnostics"])
        return lines

    def render_moor(self, data):
        lines = ["{} mooring onto {}".format(data["method"], data["base"])]
        lines.extend(
            "  {} -> {}".format(vertex, parent) for vertex, parent in data["father"].items()
        )
        verdict = "pass" if data["combing"] else "fail at {}".format("-".join(data["violating_edge"]))
        lines.append("combing: {}".format(verdict))
        return lines

    def render_fixprism(self, data):
        lines = [
            "prism: {}".format(self._braces(data["vertices"])),
            "factors: {}".format(" x ".join(self._braces(factor) for factor in data["factors"])),
            "invariant: {}".format("yes" if data["invariant"] else "no"),
            "barycenter: {}".format(
                " ".join("{}={}".format(vertex, weight) for vertex, weight in data["barycenter"].items())
            ),
        ]
        if data["stalled"]:
            lines.append("orbit dismantling stalled; brute force used")
        if data["oracle_confirmed"] is not None:
            lines.append(
                "brute force: {}".format("confirmed" if data["oracle_confirmed"] else "not confirmed")
            )
        return lines

    def render_gen(self, data):
        return EdgeListRenderer.lines(data)


class EdgeListRenderer(renderers.BaseRenderer):
    """
    Writes a serialized graph document in the edge-list format.
    """

    media_type = "text/plain"
    format = "edge-list"
    charset = "utf-8"

    @staticmethod
    def lines(data):
        vertices = data["vertices"]
        used = {label for edge in data["edges"] for label in edge}
        lines = []
        if any(label not in used for label in vertices):
            if vertices != [str(position) for position in range(len(vertices))]:
                raise InvalidParameterError(
                    "isolated vertices need numeric labels in the edge-list format; "
                    "use the structured format"
                )
            lines.append("vertices: {}".format(len(vertices)))
        lines.extend("{} {}".format(first, second) for first, second in data["edges"])
        return lines

    def render(self, data, accepted_media_type=None, renderer_context=None):
        return ("\n".join(self.lines(data)) + "\n").encode(self.charset)


class DotRenderer(renderers.BaseRenderer):
    """
    Graphviz output of a Graph, vertices in id order.
    """

    media_type = "text/vnd.graphviz"
    format = "dot"
    charset = "utf-8"

    def render(self, data, accepted_media_type=None, renderer_context=None):
        renderer_context = renderer_context or {}
        name = renderer_context.get("name", "G")
        lines = ["graph {} {{".format(name)]
        for vertex in data.vertices:
            lines.append('  {} [label="{}"];'.format(vertex, data.label(vertex).replace('"', '\\"')))
        for first, second in data.edges:
            lines.append("  {} -- {};".format(first, second))
        lines.append("}")
        return ("\n".join(lines) + "\n").encode(self.charset)
