from .objects import Document, Error
from .serializers import CertificateSerializer, DocumentSerializer, ErrorSerializer


class ExceptionHandler:
    """
    Converts exceptions into error documents and process exit codes.

    ``context`` may hold the ``graph`` the failing operation worked on, used
    to print certificates with vertex labels, and a ``meta`` dict copied into
    the document.
    """

    @classmethod
    def handle(cls, exc, context):
        """
        Dispatch to ``handle_<class name>`` for the exception class or the
        nearest base class that has a handler.

        :param Exception exc: An Exception object
        :param dict context: The graph and document meta of the failing command
        :return: (serialized document, exit code), or None for an unknown exception
        :rtype: tuple
        """

        for klass in exc.__class__.__mro__:
            handler_function_name = "handle_{}".format(klass.__name__.lower())
            if hasattr(cls, handler_function_name):
                return getattr(cls, handler_function_name)(exc, context)

        return None

    @classmethod
    def _document(cls, errors, context):
        doc = DocumentSerializer(Document(meta=(context or {}).get("meta", {})))
        doc.instance.errors = errors
        return doc.data

    @classmethod
    def handle_error(cls, exc, context):
        """
        Retrieves an error document from an Error exception

        :param bucolic.objects.Error exc: An Exception object
        :param dict context: The graph and document meta of the failing command
        :return: (document, the error's exit code)
        :rtype: tuple
        """

        return cls._document([ErrorSerializer(exc).data], context), exc.exit_code

    @classmethod
    def handle_preconditionviolation(cls, exc, context):
        """
        Like handle_error, with the certificate of the violation in the error's
        meta when a graph is known.
        """

        graph = (context or {}).get("graph")
        if exc.certificate is not None and graph is not None:
            exc.meta = dict(exc.meta)
            exc.meta["certificate"] = CertificateSerializer(
                context={"graph": graph}
            ).to_representation(exc.certificate)
        return cls.handle_error(exc, context)

    @classmethod
    def handle_coverpropertyviolation(cls, exc, context):
        exc.meta = dict(exc.meta)
        exc.meta["property"] = exc.prop
        exc.meta["precondition_breach"] = exc.precondition_breach
        if exc.witness is not None:
            exc.meta["witness"] = str(exc.witness)
        return cls.handle_error(exc, context)

    @classmethod
    def handle_apiexception(cls, exc, context):
        """
        Retrieves an error document from an APIException exception

        :param rest_framework.exceptions.APIException exc: An Exception object
        :param dict context: The graph and document meta of the failing command
        :return: (document, 2)
        :rtype: tuple
        """

        detail = getattr(exc, "detail", str(exc))

        if isinstance(detail, dict):
            # this is for cases where a ValidationError is thrown
            # which has a dict as the detail
            errors = Error.parse_validation_errors(detail)
            return cls._document(ErrorSerializer(errors, many=True).data, context), 2

        error = Error(detail=detail)
        return cls._document([ErrorSerializer(error).data], context), error.exit_code

    @classmethod
    def handle_validationerror(cls, exc, context):
        """
        Retrieves an error document from a ValidationError exception

        :param rest_framework.exceptions.ValidationError exc: An Exception object
        :param dict context: The graph and document meta of the failing command
        :return: (document, 2)
        :rtype: tuple
        """

        return cls.handle_apiexception(exc, context)
