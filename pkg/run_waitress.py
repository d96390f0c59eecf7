import os

from waitress import serve

from bialternant_system.wsgi import application

if __name__ == '__main__':
    host = os.environ.get("ODDSYMP_HOST", "0.0.0.0")
    port = int(os.environ.get("ODDSYMP_PORT", "8080"))
    print(f"Serving the character API on http://{host}:{port}")
    serve(application, host=host, port=port)
