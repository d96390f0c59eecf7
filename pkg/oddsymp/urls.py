from django.urls import path

from .views import CharacterView, OracleView, TableView, VerifyPDFView, VerifyView

urlpatterns = [
    path("char/", CharacterView.as_view(), name="character"),
    path("table/", TableView.as_view(), name="character_table"),
    path("oracle/", OracleView.as_view(), name="oracle"),
    path("verify/<str:check>/", VerifyView.as_view(), name="verify"),
    path("verify/<str:check>/pdf/", VerifyPDFView.as_view(), name="verify_pdf"),
]
