from collections import OrderedDict

from rest_framework import serializers


class DocumentSerializer(serializers.Serializer):
    """
    A Django Rest Framework Serializer that represents the root document of
    every structured report.
    """

    def to_representation(self, instance):
        """
        Create an ordered dictionary from a Document, removing the data node
        if errors exist.

        :param bucolic.serializers.objects.DocumentSerializer self: This object instance
        :param bucolic.objects.Document instance: An object containing top-level nodes
        :return: An ordered dictionary created from instance data
        :rtype: collections.OrderedDict
        """

        data = OrderedDict()
        data["data"] = instance.data

        if instance.errors:
            # an error document carries no data
            del data["data"]
            data["errors"] = instance.errors
        if instance.meta:
            data["meta"] = instance.meta

        return data


class ErrorSerializer(serializers.Serializer):
    """
    A simple serializer for Errors
    """

    def to_representation(self, instance):
        """
        Create an ordered dictionary from an error object.

        :param bucolic.serializers.objects.ErrorSerializer self: This object instance
        :param bucolic.objects.Error instance: An error
        :return: An ordered dictionary created from the instance data
        :rtype: OrderedDict
        """

        data = OrderedDict()

        if getattr(instance, "exit_code", None) is not None:
            data["status"] = str(instance.exit_code)
        if instance.code:
            data["code"] = instance.code
        if instance.title:
            data["title"] = instance.title
        if instance.detail:
            data["detail"] = str(instance.detail)
        if instance.source:
            data["source"] = instance.source
        if instance.meta:
            data["meta"] = instance.meta

        return data
