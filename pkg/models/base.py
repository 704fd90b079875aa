from pydantic import BaseModel


class Schema(BaseModel):
    """Base for every result record the library hands out or serializes."""

    class Config:
        from_attributes = True
        populate_by_name = True
        frozen = True
