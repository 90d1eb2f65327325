from rest_framework.exceptions import APIException


class Document:
    """
    The root document of every structured report the toolkit emits.

    ...

    Attributes
    ----------
    data : dict or list
        The document's primary data (a report, a tree, a witness)
    errors: list
        a list of serialized error objects
    meta: dict
        non-standard meta-information; the CLI stores the tool version, the
        input hash and the command line here
    """

    def __init__(self, **kwargs):
        """
        Set local variables from keyword arguments

        :param bucolic.objects.Document self: This object
        :param dict|list data: The document's primary data
        :param list errors: a list of serialized error objects
        :param dict meta: a meta dictionary
        """

        self.data = kwargs.get("data", {})
        self.errors = kwargs.get("errors", [])
        self.meta = kwargs.get("meta", {})


class Error(APIException):
    """
    The root error object of the toolkit. Every exception raised on purpose by
    the library is an Error, so the CLI can render it as a document.
    """

    default_exit_code = 2
    default_title = ""

    def __init__(self, detail, **kwargs):
        """
        Builds an error

        :param bucolic.objects.Error self: This object
        :param string detail: An error message
        :param int exit_code: The process exit code the CLI uses for this error
        :param dict code: An application-specific error code, expressed as a string value
        :param dict title: A short, human-readable summary of the problem
        :param dict source: A dictionary containing references to the source of the error
        :param dict meta: a meta dictionary containing non-standard meta-information
        about the error (certificates, witnesses)
        """

        self.detail = detail
        self.exit_code = kwargs.get("exit_code", self.default_exit_code)
        self.code = kwargs.get("code", {})
        self.title = kwargs.get("title", self.default_title)
        self.source = kwargs.get("source", {})
        self.meta = kwargs.get("meta", {})
        super().__init__(detail)

    @staticmethod
    def parse_validation_errors(error_dict, prefix="document"):
        """
        A simple helper factory that parses the standard output from
        Serializer.errors (dict) and returns an array of Error objects

        :param dict error_dict: A dictionary of error messages and codes
        :param str prefix: The pointer prefix of the offending document
        :return: A list of errors
        :rtype: list
        """

        error_list = []

        for (attribute, errors) in error_dict.items():
            if isinstance(errors, (str, dict)):
                errors = [errors]
            for error in errors:
                error_list.append(
                    Error(
                        source={"pointer": "{}/{}".format(prefix, attribute)},
                        detail=str(error),
                    )
                )

        return error_list


class UnknownVertexError(Error):
    default_title = "Unknown vertex"


class DisconnectedGraphError(Error):
    default_title = "Disconnected graph"


class InvalidParameterError(Error):
    default_title = "Invalid parameter"


class PreconditionViolation(Error):
    """
    Raised when an operation's hypothesis fails. ``certificate`` names the
    configuration that breaks it (a condition witness or a pattern occurrence).
    """

    default_title = "Precondition violation"

    def __init__(self, detail, certificate=None, **kwargs):
        self.certificate = certificate
        super().__init__(detail, **kwargs)


class NotGatedError(PreconditionViolation):
    default_title = "Set is not gated"


class BudgetExceededError(Error):
    default_title = "Budget exceeded"


class CoverConsistencyError(PreconditionViolation):
    default_title = "Cover relation is not transitive"


class CoverPropertyViolation(Error):
    """
    One of the level properties of the cover construction failed.
    ``precondition_breach`` tells a bad base complex apart from an
    internal inconsistency.
    """

    default_title = "Cover property violated"

    def __init__(self, detail, prop, witness=None, precondition_breach=False, **kwargs):
        self.prop = prop
        self.witness = witness
        self.precondition_breach = precondition_breach
        super().__init__(detail, **kwargs)


class DecompositionError(Error):
    default_title = "Decomposition failed"


class InvalidPermutationError(Error):
    default_title = "Invalid permutation"


class DocumentParseError(Error):
    default_title = "Parse error"

    def __init__(self, detail, line=None, column=None, **kwargs):
        self.line = line
        self.column = column
        kwargs.setdefault("source", {"line": line, "column": column})
        super().__init__(detail, **kwargs)
