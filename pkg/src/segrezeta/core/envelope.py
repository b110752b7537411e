#
# Copyright segrezeta authors 2026. License: AGPL
# _______________________________________________

import hashlib
import json
from dataclasses import dataclass

from segrezeta.core.version import VERSION

SCHEMA = "v1"


def content_hash(text):
    return "sha256:" + hashlib.sha256(text.encode("utf-8")).hexdigest()


@dataclass(frozen=True)
class ResultEnvelope:
    """the result of one command together with everything needed to reproduce it"""

    command: str
    inputs: tuple
    parameters: dict
    payload: dict

    def to_dict(self):
        return {
            "schema": SCHEMA,
            "version": VERSION,
            "command": self.command,
            "inputs": [{"path": path, "hash": digest} for path, digest in self.inputs],
            "parameters": self.parameters,
            "payload": self.payload,
        }


    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)


    def to_text(self):
        """human readable view of the same content"""
        lines = [self.command + " (segrezeta " + VERSION + ")"]
        for path, digest in self.inputs:
            lines.append("  input      " + path + "  " + digest[:19])
        lines.append("  parameters " + ", ".join(k + "=" + str(v) for k, v in sorted(self.parameters.items())))
        width = max([len(k) for k in self.payload] + [0])
        for key in sorted(self.payload):
            lines.append("  " + key.ljust(width) + "  " + _format_value(self.payload[key]))
        return "\n".join(lines)


def _format_value(value):
    if isinstance(value, (dict, list)):
        return json.dumps(value, sort_keys=True)
    return str(value)
