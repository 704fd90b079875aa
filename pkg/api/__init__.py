from . import code, decode, encode, simulate, transform, verify

COMMANDS = {
    "code": code.run,
    "encode": encode.run,
    "decode": decode.run,
    "transform": transform.run,
    "verify": verify.run,
    "simulate": simulate.run,
}

__all__ = ["code", "encode", "decode", "transform", "verify", "simulate", "COMMANDS"]
